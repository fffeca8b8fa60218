//! Per-graph bundle of every invariant the crate computes.

use serde::Serialize;

use crate::closed::ClosedForms;
use crate::error::{Error, Result};
use crate::graph::{
    canonical_certificate, distance_matrix, unicyclic_decompose, weighted_transmission,
    Certificate, Graph, DEFAULT_CANON_LIMIT,
};
use crate::numeric::{spanning_tree_count, Rational};
use crate::resistance::{kf_branch_decomposition, resistance_matrix, ResistanceMatrix};
use crate::walk::HittingTimeMatrix;
use crate::VERSION;

/// How resistances, hitting times and cover costs were obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComputationPath {
    /// Cycle-plus-branches resistances and the unicyclic closed forms.
    UnicyclicClosedForm,
    /// Reduced-Laplacian resistances and the general hitting-time formula.
    Laplacian,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ReportOptions {
    /// Use the Laplacian path even when the graph is unicyclic.
    pub force_laplacian: bool,
    /// Compute every available path and record exact mismatches.
    pub verify: bool,
    /// Reject graphs that are not unicyclic.
    pub unicyclic_only: bool,
    /// Add 15-significant-digit decimal companions to rational fields.
    pub approx: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum CycleLength {
    Length(usize),
    Label(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexApprox {
    pub resistance_centrality: String,
    pub weighted_resistance_centrality: String,
    pub cover_cost: String,
    pub reverse_cover_cost: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexRow {
    pub vertex: usize,
    pub degree: usize,
    pub transmission: usize,
    pub weighted_transmission: usize,
    pub eccentricity: usize,
    pub resistance_centrality: Rational,
    pub weighted_resistance_centrality: Rational,
    pub cover_cost: Rational,
    pub reverse_cover_cost: Rational,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub approx: Option<VertexApprox>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Scalars {
    pub wiener_index: usize,
    pub kirchhoff_index: Rational,
    pub additive_degree_kirchhoff: Rational,
    pub multiplicative_degree_kirchhoff: Rational,
    pub spanning_trees: String,
    /// Cycle length, `"tree"`, or `"other"` for graphs with several cycles.
    pub cycle_length: CycleLength,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub version: String,
    pub path: ComputationPath,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    /// Canonical certificate; absent above the canonical-labeling size limit.
    pub certificate: Option<Certificate>,
    pub vertices: Vec<VertexRow>,
    pub scalars: Scalars,
    pub provenance: Provenance,
    /// Exact disagreements between computation paths (verify mode only).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub mismatches: Vec<String>,
}

struct Values {
    r: ResistanceMatrix,
    cc: Vec<Rational>,
    rc: Vec<Rational>,
    weighted: Vec<Rational>,
    kf_plus: Rational,
    kf_star: Rational,
}

fn laplacian_values(g: &Graph) -> Result<(Values, HittingTimeMatrix)> {
    let r = resistance_matrix(g)?;
    let h = HittingTimeMatrix::from_resistance(g, &r);
    let n = g.n();
    let v = Values {
        cc: (0..n).map(|x| h.cover_cost(x)).collect(),
        rc: (0..n).map(|x| h.reverse_cover_cost(x)).collect(),
        weighted: (0..n).map(|x| r.weighted_centrality(g, x)).collect(),
        kf_plus: r.additive_degree_kirchhoff(g),
        kf_star: r.multiplicative_degree_kirchhoff(g),
        r,
    };
    Ok((v, h))
}

fn closed_values(cf: &ClosedForms) -> Values {
    let n = cf.decomposition().n();
    Values {
        r: cf.resistance().clone(),
        cc: (0..n).map(|x| cf.cover_cost(x)).collect(),
        rc: (0..n).map(|x| cf.reverse_cover_cost(x)).collect(),
        weighted: (0..n).map(|x| cf.weighted_centrality(x)).collect(),
        kf_plus: cf.additive_degree_kirchhoff(),
        kf_star: cf.multiplicative_degree_kirchhoff(),
    }
}

fn diff_values(a: &Values, b: &Values, tag: &str, out: &mut Vec<String>) {
    let n = a.cc.len();
    let mut note = |what: String, x: &Rational, y: &Rational| {
        if x != y {
            out.push(format!("{tag}: {what}: {x} vs {y}"));
        }
    };
    for x in 0..n {
        for y in 0..n {
            note(format!("r({x},{y})"), a.r.get(x, y), b.r.get(x, y));
        }
        note(format!("CC({x})"), &a.cc[x], &b.cc[x]);
        note(format!("RC({x})"), &a.rc[x], &b.rc[x]);
        note(format!("R^w({x})"), &a.weighted[x], &b.weighted[x]);
    }
    note("Kf+".into(), &a.kf_plus, &b.kf_plus);
    note("Kf*".into(), &a.kf_star, &b.kf_star);
}

impl InvariantReport {
    pub fn compute(g: &Graph, opts: ReportOptions) -> Result<Self> {
        let n = g.n();
        let dec = match unicyclic_decompose(g) {
            Ok(dec) => Some(dec),
            Err(e) if opts.unicyclic_only => return Err(e),
            Err(_) => None,
        };
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let cf = dec.as_ref().map(ClosedForms::new);
        let mut mismatches = Vec::new();

        let (values, path) = match (&cf, opts.force_laplacian) {
            (Some(cf), false) => (closed_values(cf), ComputationPath::UnicyclicClosedForm),
            _ => (laplacian_values(g)?.0, ComputationPath::Laplacian),
        };

        let trees = match (&dec, opts.verify) {
            (Some(dec), false) => dec.l().into(),
            _ => spanning_tree_count(g),
        };

        if opts.verify {
            let (lap, h_formula) = laplacian_values(g)?;
            let h = HittingTimeMatrix::compute(g)?;
            let oracle = Values {
                r: lap.r.clone(),
                cc: (0..n).map(|x| h.cover_cost(x)).collect(),
                rc: (0..n).map(|x| h.reverse_cover_cost(x)).collect(),
                weighted: lap.weighted.clone(),
                kf_plus: lap.kf_plus.clone(),
                kf_star: lap.kf_star.clone(),
            };
            for x in 0..n {
                for y in 0..n {
                    if h.get(x, y) != h_formula.get(x, y) {
                        mismatches.push(format!(
                            "general formula: H({x},{y}): {} vs {}",
                            h.get(x, y),
                            h_formula.get(x, y)
                        ));
                    }
                }
            }
            diff_values(&oracle, &lap, "laplacian", &mut mismatches);
            if let (Some(cf), Some(dec)) = (&cf, &dec) {
                diff_values(&oracle, &closed_values(cf), "closed form", &mut mismatches);
                for x in 0..n {
                    for y in 0..n {
                        let u = cf.hitting_time(x, y);
                        if *h.get(x, y) != u {
                            mismatches.push(format!(
                                "unicyclic formula: H({x},{y}): {} vs {u}",
                                h.get(x, y)
                            ));
                        }
                    }
                }
                let branched = kf_branch_decomposition(dec);
                if branched != lap.r.kirchhoff_index() {
                    mismatches.push(format!(
                        "Kf branch decomposition: {} vs {branched}",
                        lap.r.kirchhoff_index()
                    ));
                }
                if trees != dec.l().into() {
                    mismatches.push(format!(
                        "spanning trees: {trees} vs cycle length {}",
                        dec.l()
                    ));
                }
            }
        }

        let d = distance_matrix(g);
        let vertices = (0..n)
            .map(|x| {
                let r_x = values.r.centrality(x);
                let approx = opts.approx.then(|| VertexApprox {
                    resistance_centrality: r_x.approx_string(),
                    weighted_resistance_centrality: values.weighted[x].approx_string(),
                    cover_cost: values.cc[x].approx_string(),
                    reverse_cover_cost: values.rc[x].approx_string(),
                });
                VertexRow {
                    vertex: x,
                    degree: g.degree(x),
                    transmission: d.transmission(x),
                    weighted_transmission: weighted_transmission(g, x),
                    eccentricity: d.eccentricity(x),
                    resistance_centrality: r_x,
                    weighted_resistance_centrality: values.weighted[x].clone(),
                    cover_cost: values.cc[x].clone(),
                    reverse_cover_cost: values.rc[x].clone(),
                    approx,
                }
            })
            .collect();

        let cycle_length = match &dec {
            Some(dec) => CycleLength::Length(dec.l()),
            None if g.is_tree() => CycleLength::Label("tree".into()),
            None => CycleLength::Label("other".into()),
        };
        let certificate = if n <= DEFAULT_CANON_LIMIT {
            Some(canonical_certificate(g)?)
        } else {
            None
        };

        Ok(InvariantReport {
            n,
            edges: g.edges().to_vec(),
            certificate,
            vertices,
            scalars: Scalars {
                wiener_index: d.wiener_index(),
                kirchhoff_index: values.r.kirchhoff_index(),
                additive_degree_kirchhoff: values.kf_plus,
                multiplicative_degree_kirchhoff: values.kf_star,
                spanning_trees: trees.to_string(),
                cycle_length,
            },
            provenance: Provenance {
                version: VERSION.to_string(),
                path,
                verified: opts.verify,
            },
            mismatches,
        })
    }

    /// One row per vertex; scalars repeat on every row.
    pub fn to_csv(&self, approx: bool) -> String {
        let mut header = vec![
            "vertex",
            "degree",
            "D",
            "Dw",
            "eccentricity",
            "R",
            "Rw",
            "CC",
            "RC",
            "W",
            "Kf",
            "Kf_plus",
            "Kf_star",
        ];
        if approx {
            header.extend(["R_approx", "Rw_approx", "CC_approx", "RC_approx"]);
        }
        let mut out = header.join(",");
        out.push('\n');
        let s = &self.scalars;
        for v in &self.vertices {
            let mut cells = vec![
                v.vertex.to_string(),
                v.degree.to_string(),
                v.transmission.to_string(),
                v.weighted_transmission.to_string(),
                v.eccentricity.to_string(),
                v.resistance_centrality.to_string(),
                v.weighted_resistance_centrality.to_string(),
                v.cover_cost.to_string(),
                v.reverse_cover_cost.to_string(),
                s.wiener_index.to_string(),
                s.kirchhoff_index.to_string(),
                s.additive_degree_kirchhoff.to_string(),
                s.multiplicative_degree_kirchhoff.to_string(),
            ];
            if approx {
                cells.extend([
                    v.resistance_centrality.approx_string(),
                    v.weighted_resistance_centrality.approx_string(),
                    v.cover_cost.approx_string(),
                    v.reverse_cover_cost.approx_string(),
                ]);
            }
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}
