//! Exact identity checks on individual graphs and exhaustive sweeps.

use rayon::prelude::*;

use super::bounds::lemma_2_4_bounds;
use super::report::{Counterexample, Params, VerificationReport};
use crate::closed::ClosedForms;
use crate::error::{Error, Result};
use crate::graph::{
    distance_matrix, enumerate_trees, enumerate_unicyclic_with_limit, unicyclic_decompose,
    weighted_transmission, EnumerationLimit, Graph, UnicyclicDecomposition,
};
use crate::numeric::{spanning_tree_count, Rational};
use crate::resistance::{kf_branch_decomposition, resistance_matrix, ResistanceMatrix};
use crate::walk::{hitting_time_formula_general, HittingTimeMatrix};

fn q(v: usize) -> Rational {
    Rational::from(v)
}

fn require_unicyclic(g: &Graph) -> Result<UnicyclicDecomposition> {
    unicyclic_decompose(g)
}

fn require_tree(g: &Graph) -> Result<()> {
    if g.is_tree() {
        Ok(())
    } else {
        Err(Error::NotATree { n: g.n(), m: g.m() })
    }
}

/// Cover-cost and reverse-cover-cost closed forms against walk sums.
pub fn check_cc_rc_identities(g: &Graph) -> Result<VerificationReport> {
    check_cc_rc_identities_with(
        g,
        |cf, x| cf.cover_cost(x),
        |cf, x| cf.reverse_cover_cost(x),
    )
}

/// As [`check_cc_rc_identities`], with substitute closed forms.
pub fn check_cc_rc_identities_with(
    g: &Graph,
    cc: impl Fn(&ClosedForms, usize) -> Rational,
    rc: impl Fn(&ClosedForms, usize) -> Rational,
) -> Result<VerificationReport> {
    let dec = require_unicyclic(g)?;
    let cf = ClosedForms::new(&dec);
    let h = HittingTimeMatrix::compute(g)?;
    let mut report = VerificationReport::new("cc-rc-identities", Params::nl(g.n(), dec.l()));
    report.graphs_checked = 1;
    for x in 0..g.n() {
        let walk = h.cover_cost(x);
        let closed = cc(&cf, x);
        report.expect_eq(&walk, &closed, || {
            Counterexample::new(g, "CC", walk.clone(), closed.clone()).at(x)
        });
        let walk = h.reverse_cover_cost(x);
        let closed = rc(&cf, x);
        report.expect_eq(&walk, &closed, || {
            Counterexample::new(g, "RC", walk.clone(), closed.clone()).at(x)
        });
    }
    Ok(report)
}

/// Degree-Kirchhoff closed forms and the branch decomposition of `Kf`.
pub fn check_kf_identities(g: &Graph) -> Result<VerificationReport> {
    check_kf_identities_with(
        g,
        |cf| cf.additive_degree_kirchhoff(),
        |cf| cf.multiplicative_degree_kirchhoff(),
        kf_branch_decomposition,
    )
}

pub fn check_kf_identities_with(
    g: &Graph,
    kf_plus: impl Fn(&ClosedForms) -> Rational,
    kf_star: impl Fn(&ClosedForms) -> Rational,
    branch_kf: impl Fn(&UnicyclicDecomposition) -> Rational,
) -> Result<VerificationReport> {
    let dec = require_unicyclic(g)?;
    let cf = ClosedForms::new(&dec);
    let r = resistance_matrix(g)?;
    let mut report = VerificationReport::new("kf-identities", Params::nl(g.n(), dec.l()));
    report.graphs_checked = 1;
    kf_checks(
        g,
        &dec,
        &cf,
        &r,
        &mut report,
        &kf_plus,
        &kf_star,
        &branch_kf,
    );
    Ok(report)
}

#[allow(clippy::too_many_arguments)]
fn kf_checks(
    g: &Graph,
    dec: &UnicyclicDecomposition,
    cf: &ClosedForms,
    r: &ResistanceMatrix,
    report: &mut VerificationReport,
    kf_plus: &dyn Fn(&ClosedForms) -> Rational,
    kf_star: &dyn Fn(&ClosedForms) -> Rational,
    branch_kf: &dyn Fn(&UnicyclicDecomposition) -> Rational,
) {
    let n = g.n();
    let kf = r.kirchhoff_index();
    let direct_plus = r.additive_degree_kirchhoff(g);
    let direct_star = r.multiplicative_degree_kirchhoff(g);
    let weighted: Vec<Rational> = (0..n).map(|x| r.weighted_centrality(g, x)).collect();

    let sum_r: Rational = (0..n).map(|x| r.centrality(x)).sum();
    let two_kf = Rational::from(2i64) * &kf;
    report.expect_eq(&two_kf, &sum_r, || {
        Counterexample::new(g, "sum R = 2 Kf", two_kf.clone(), sum_r.clone())
    });

    let sum_w: Rational = weighted.iter().sum();
    report.expect_eq(&direct_plus, &sum_w, || {
        Counterexample::new(g, "sum R^w = Kf+", direct_plus.clone(), sum_w.clone())
    });
    let half_dw: Rational = weighted
        .iter()
        .enumerate()
        .map(|(x, w)| w * q(g.degree(x)))
        .sum::<Rational>()
        * Rational::frac(1, 2);
    report.expect_eq(&direct_star, &half_dw, || {
        Counterexample::new(
            g,
            "sum d R^w / 2 = Kf*",
            direct_star.clone(),
            half_dw.clone(),
        )
    });

    let closed_plus = kf_plus(cf);
    report.expect_eq(&direct_plus, &closed_plus, || {
        Counterexample::new(
            g,
            "Kf+ closed form",
            direct_plus.clone(),
            closed_plus.clone(),
        )
    });
    let closed_star = kf_star(cf);
    report.expect_eq(&direct_star, &closed_star, || {
        Counterexample::new(
            g,
            "Kf* closed form",
            direct_star.clone(),
            closed_star.clone(),
        )
    });
    let branched = branch_kf(dec);
    report.expect_eq(&kf, &branched, || {
        Counterexample::new(g, "Kf branch decomposition", kf.clone(), branched.clone())
    });
}

/// Linear-system hitting times against the resistance formula (and the
/// unicyclic formula when it applies), plus the commute-time identity and
/// the resistance-matrix sanity properties.
pub fn check_hitting_agreement(g: &Graph) -> Result<VerificationReport> {
    let h = HittingTimeMatrix::compute(g)?;
    let r = resistance_matrix(g)?;
    let dec = unicyclic_decompose(g).ok();
    let cf = dec.as_ref().map(ClosedForms::new);
    let mut report = VerificationReport::new("hitting-agreement", Params::n(g.n()));
    report.graphs_checked = 1;
    hitting_checks(g, &h, &r, cf.as_ref(), &mut report);
    Ok(report)
}

fn hitting_checks(
    g: &Graph,
    h: &HittingTimeMatrix,
    r: &ResistanceMatrix,
    cf: Option<&ClosedForms>,
    report: &mut VerificationReport,
) {
    let n = g.n();
    let d = distance_matrix(g);
    let two_m = q(2 * g.m());
    let tree = g.is_tree();
    for x in 0..n {
        for y in 0..n {
            let exact = h.get(x, y);
            let general = hitting_time_formula_general(g, r, x, y);
            report.expect_eq(exact, &general, || {
                Counterexample::new(g, "H general formula", exact.clone(), general.clone())
                    .pair(x, y)
            });
            if let Some(cf) = cf {
                let uni = cf.hitting_time(x, y);
                report.expect_eq(exact, &uni, || {
                    Counterexample::new(g, "H unicyclic formula", exact.clone(), uni.clone())
                        .pair(x, y)
                });
                let ru = cf.resistance().get(x, y);
                report.expect_eq(r.get(x, y), ru, || {
                    Counterexample::new(g, "r unicyclic route", r.get(x, y).clone(), ru.clone())
                        .pair(x, y)
                });
            }
            let commute = h.get(x, y) + h.get(y, x);
            let want = &two_m * r.get(x, y);
            report.expect_eq(&want, &commute, || {
                Counterexample::new(g, "commute time", want.clone(), commute.clone()).pair(x, y)
            });
            let rxy = r.get(x, y);
            let dxy = q(d.get(x, y));
            let ok = if x == y {
                rxy.is_zero()
            } else if tree {
                *rxy == dxy
            } else {
                rxy.is_positive() && *rxy <= dxy
            };
            if !ok {
                report.fail(
                    Counterexample::new(g, "resistance vs distance", dxy, rxy.clone()).pair(x, y),
                );
            }
            for z in 0..n {
                let lhs = r.get(x, y) + r.get(y, z);
                if lhs < *r.get(x, z) {
                    report.fail(
                        Counterexample::new(
                            g,
                            "resistance triangle inequality",
                            r.get(x, z).clone(),
                            lhs,
                        )
                        .pair(x, z),
                    );
                }
            }
        }
    }
    if !tree && (0..n).all(|x| (0..n).all(|y| *r.get(x, y) == q(d.get(x, y)))) {
        report.fail(Counterexample::new(
            g,
            "r = d on a non-tree",
            Rational::zero(),
            Rational::zero(),
        ));
    }
}

/// `R^w(x) = 2 R(x) + 2 d(x, v_k) - (n - l)` for every vertex, using
/// Laplacian resistances.
pub fn check_weighted_centrality(g: &Graph) -> Result<VerificationReport> {
    let dec = require_unicyclic(g)?;
    let r = resistance_matrix(g)?;
    let mut report = VerificationReport::new("weighted-centrality", Params::nl(g.n(), dec.l()));
    report.graphs_checked = 1;
    weighted_centrality_checks(g, &dec, &r, &mut report);
    Ok(report)
}

fn weighted_centrality_checks(
    g: &Graph,
    dec: &UnicyclicDecomposition,
    r: &ResistanceMatrix,
    report: &mut VerificationReport,
) {
    for x in 0..g.n() {
        let actual = r.weighted_centrality(g, x);
        let want = Rational::from(2i64) * r.centrality(x) + q(2 * dec.branch_distance(x))
            - q(dec.n() - dec.l());
        report.expect_eq(&want, &actual, || {
            Counterexample::new(g, "R^w", want.clone(), actual.clone()).at(x)
        });
    }
}

/// Within one unicyclic graph, `d(x, v_i) <= d(y, v_j)` iff `CC(x) >= CC(y)`.
pub fn check_cover_cost_monotonicity(g: &Graph) -> Result<VerificationReport> {
    let dec = require_unicyclic(g)?;
    let h = HittingTimeMatrix::compute(g)?;
    let mut report = VerificationReport::new("cover-cost-monotonicity", Params::nl(g.n(), dec.l()));
    report.graphs_checked = 1;
    monotonicity_checks(g, &dec, &h, &mut report);
    Ok(report)
}

fn monotonicity_checks(
    g: &Graph,
    dec: &UnicyclicDecomposition,
    h: &HittingTimeMatrix,
    report: &mut VerificationReport,
) {
    let cc: Vec<Rational> = (0..g.n()).map(|x| h.cover_cost(x)).collect();
    for x in 0..g.n() {
        for y in 0..g.n() {
            let closer = dec.branch_distance(x) <= dec.branch_distance(y);
            let costlier = cc[x] >= cc[y];
            if closer != costlier {
                report.fail(
                    Counterexample::new(
                        g,
                        "CC monotone in branch depth",
                        cc[y].clone(),
                        cc[x].clone(),
                    )
                    .pair(x, y),
                );
            }
        }
    }
}

/// Every exact check that applies to one unicyclic graph, sharing one
/// hitting-time matrix and one resistance matrix.
pub fn check_unicyclic_graph(g: &Graph) -> Result<VerificationReport> {
    let dec = require_unicyclic(g)?;
    let cf = ClosedForms::new(&dec);
    let h = HittingTimeMatrix::compute(g)?;
    let r = resistance_matrix(g)?;
    let mut report = VerificationReport::new("unicyclic-identities", Params::nl(g.n(), dec.l()));
    report.graphs_checked = 1;

    hitting_checks(g, &h, &r, Some(&cf), &mut report);
    for x in 0..g.n() {
        let walk = h.cover_cost(x);
        let closed = cf.cover_cost(x);
        report.expect_eq(&walk, &closed, || {
            Counterexample::new(g, "CC", walk.clone(), closed.clone()).at(x)
        });
        let walk = h.reverse_cover_cost(x);
        let closed = cf.reverse_cover_cost(x);
        report.expect_eq(&walk, &closed, || {
            Counterexample::new(g, "RC", walk.clone(), closed.clone()).at(x)
        });
    }
    kf_checks(
        g,
        &dec,
        &cf,
        &r,
        &mut report,
        &|cf| cf.additive_degree_kirchhoff(),
        &|cf| cf.multiplicative_degree_kirchhoff(),
        &kf_branch_decomposition,
    );
    weighted_centrality_checks(g, &dec, &r, &mut report);
    monotonicity_checks(g, &dec, &h, &mut report);

    let trees = Rational::from(spanning_tree_count(g));
    let l = q(dec.l());
    report.expect_eq(&l, &trees, || {
        Counterexample::new(g, "spanning trees = l", l.clone(), trees.clone())
    });
    Ok(report)
}

/// Tree identities `CC(x) + D(x) = 2W`, `RC(x) + (2n-1) CC(x) = 4(n-1) W`
/// and `D^w(x) = 2 D(x) - m`.
pub fn check_tree_identities(t: &Graph) -> Result<VerificationReport> {
    require_tree(t)?;
    let n = t.n();
    let d = distance_matrix(t);
    let w = q(d.wiener_index());
    let h = HittingTimeMatrix::compute(t)?;
    let mut report = VerificationReport::new("tree-identities", Params::n(n));
    report.graphs_checked = 1;
    for x in 0..n {
        let cc = h.cover_cost(x);
        let dx = q(d.transmission(x));
        let lhs = &cc + &dx;
        let want = Rational::from(2i64) * &w;
        report.expect_eq(&want, &lhs, || {
            Counterexample::new(t, "CC + D = 2W", want.clone(), lhs.clone()).at(x)
        });
        let lhs = h.reverse_cover_cost(x) + q(2 * n - 1) * &cc;
        let want = q(4 * (n - 1)) * &w;
        report.expect_eq(&want, &lhs, || {
            Counterexample::new(t, "RC + (2n-1) CC = 4(n-1) W", want.clone(), lhs.clone()).at(x)
        });
        let dw = weighted_transmission(t, x);
        if dw + t.m() != 2 * d.transmission(x) {
            report.fail(
                Counterexample::new(
                    t,
                    "D^w = 2D - m",
                    q(2 * d.transmission(x)) - q(t.m()),
                    q(dw),
                )
                .at(x),
            );
        }
    }
    Ok(report)
}

/// Bounds on `(2n - 1) D_T(v) - 2 W(T)` and their equality cases.
pub fn check_lemma_2_4(t: &Graph, v: usize) -> Result<VerificationReport> {
    require_tree(t)?;
    t.check_vertex(v)?;
    let n = t.n();
    let d = distance_matrix(t);
    let value = q((2 * n - 1) * d.transmission(v)) - q(2 * d.wiener_index());
    let (lo, hi) = lemma_2_4_bounds(n);
    let mut report = VerificationReport::new("tree-transmission-bounds", Params::n(n));
    report.graphs_checked = 1;
    if value < lo {
        report.fail(Counterexample::new(t, "lower bound", lo.clone(), value.clone()).at(v));
    }
    if value > hi {
        report.fail(Counterexample::new(t, "upper bound", hi.clone(), value.clone()).at(v));
    }
    if n >= 3 {
        let is_center = t.degree(v) == n - 1;
        let is_path_end = (0..n).all(|x| t.degree(x) <= 2) && t.degree(v) == 1;
        if (value == lo) != is_center {
            report.fail(
                Counterexample::new(
                    t,
                    "lower equality iff star center",
                    lo.clone(),
                    value.clone(),
                )
                .at(v),
            );
        }
        if (value == hi) != is_path_end {
            report.fail(Counterexample::new(t, "upper equality iff path end", hi, value).at(v));
        }
    }
    Ok(report)
}

fn merge(
    name: &str,
    params: Params,
    parts: Vec<Result<VerificationReport>>,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(name, params);
    for part in parts {
        let part = part?;
        report.graphs_checked += part.graphs_checked;
        if !part.passed() {
            report.status = part.status;
            if report.counterexample.is_none() {
                report.counterexample = part.counterexample;
            }
        }
    }
    Ok(report)
}

/// Runs [`check_unicyclic_graph`] on every unicyclic graph with
/// `3 <= n <= n_max`, and the hitting-time agreement on every tree with
/// `2 <= n <= n_max`.
pub fn verify_identities(n_max: usize, limit: EnumerationLimit) -> Result<VerificationReport> {
    limit.check(n_max)?;
    let mut graphs = Vec::new();
    for n in 3..=n_max {
        graphs.extend(enumerate_unicyclic_with_limit(n, limit)?);
    }
    let mut trees = Vec::new();
    for n in 2..=n_max {
        trees.extend(enumerate_trees(n, limit)?);
    }
    let mut parts: Vec<Result<VerificationReport>> =
        graphs.par_iter().map(check_unicyclic_graph).collect();
    parts.extend(
        trees
            .par_iter()
            .map(check_hitting_agreement)
            .collect::<Vec<_>>(),
    );
    merge("identities", Params::n_max(n_max), parts)
}

/// Tree identities, the transmission bounds at every vertex, and the Wiener-index range
/// with its extremal trees, for every tree with `2 <= n <= n_max`.
pub fn verify_trees(n_max: usize, limit: EnumerationLimit) -> Result<VerificationReport> {
    limit.check(n_max)?;
    let mut trees = Vec::new();
    for n in 2..=n_max {
        trees.extend(enumerate_trees(n, limit)?);
    }
    let parts: Vec<Result<VerificationReport>> = trees
        .par_iter()
        .map(|t| {
            let mut r = check_tree_identities(t)?;
            for v in 0..t.n() {
                r.absorb(check_lemma_2_4(t, v)?);
            }
            r.graphs_checked = 1;
            let n = t.n();
            let w = distance_matrix(t).wiener_index();
            let (lo, hi) = ((n - 1) * (n - 1), (n * n * n - n) / 6);
            let is_star = (0..n).any(|x| t.degree(x) == n - 1);
            let is_path = (0..n).all(|x| t.degree(x) <= 2);
            if w < lo || w > hi || (w == lo) != is_star || (w == hi) != is_path {
                r.fail(Counterexample::new(t, "Wiener index range", q(lo), q(w)));
            }
            Ok(r)
        })
        .collect();
    merge("trees", Params::n_max(n_max), parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{cycle, cycle_with_pendants, cycle_with_tail, path, star};

    #[test]
    fn cc_rc_identities_pass_and_negative_control() {
        for n in 3..=30 {
            let g = cycle(n).unwrap();
            assert!(check_cc_rc_identities(&g).unwrap().passed());
        }
        let g = cycle_with_tail(6, 3).unwrap();
        assert!(check_cc_rc_identities(&g).unwrap().passed());
        // closed form with n replaced by n + 1
        let bad = check_cc_rc_identities_with(
            &g,
            |cf, x| {
                let dec = cf.decomposition();
                Rational::from(2i64) * cf.kirchhoff_index() + q(dec.total_branch_transmission())
                    - q(dec.n() + 1) * q(dec.branch_distance(x))
            },
            |cf, x| cf.reverse_cover_cost(x),
        )
        .unwrap();
        assert!(!bad.passed());
        let ce = bad.counterexample.unwrap();
        assert_eq!(ce.quantity, "CC");
        assert!(ce.vertex.is_some());
    }

    #[test]
    fn kf_identities_pass_and_negative_control() {
        for g in [
            cycle_with_pendants(4, 3).unwrap(),
            cycle_with_tail(6, 3).unwrap(),
            cycle(5).unwrap(),
        ] {
            assert!(check_kf_identities(&g).unwrap().passed());
        }
        let g = cycle_with_pendants(6, 4).unwrap();
        let bad = check_kf_identities_with(
            &g,
            |cf| cf.additive_degree_kirchhoff() + Rational::one(),
            |cf| cf.multiplicative_degree_kirchhoff(),
            kf_branch_decomposition,
        )
        .unwrap();
        assert_eq!(bad.counterexample.unwrap().quantity, "Kf+ closed form");
    }

    #[test]
    fn lemma_2_4_examples() {
        let s6 = star(6).unwrap();
        assert!(check_lemma_2_4(&s6, 0).unwrap().passed());
        assert!(check_lemma_2_4(&s6, 3).unwrap().passed());
        let p6 = path(6).unwrap();
        assert!(check_lemma_2_4(&p6, 0).unwrap().passed());
        assert!(check_lemma_2_4(&p6, 2).unwrap().passed());
        assert!(check_lemma_2_4(&cycle(4).unwrap(), 0).is_err());
    }

    #[test]
    fn non_unicyclic_input_is_an_error() {
        assert!(matches!(
            check_cc_rc_identities(&path(4).unwrap()),
            Err(Error::NotUnicyclic { .. })
        ));
        assert!(matches!(
            check_tree_identities(&cycle(4).unwrap()),
            Err(Error::NotATree { .. })
        ));
    }

    #[test]
    fn small_sweeps() {
        let r = verify_identities(5, EnumerationLimit::default()).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.graphs_checked, 1 + 2 + 5 + 1 + 1 + 2 + 3);
        let t = verify_trees(6, EnumerationLimit::default()).unwrap();
        assert!(t.passed(), "{t:?}");
    }
}
