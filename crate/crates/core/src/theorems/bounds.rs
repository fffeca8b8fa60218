//! Closed-form bound polynomials, evaluated exactly.

use crate::numeric::Rational;

fn q(numer: i64, denom: i64) -> Rational {
    Rational::frac(numer, denom)
}

/// Lower bound on `CC(x)` over all unicyclic graphs of order `n >= 3`, as
/// in four pieces.
pub fn eval_f1(n: usize) -> Rational {
    let m = n as i64;
    match n {
        4..=8 => q(m * m * m - m * m + 4 * m - 6, 6),
        3 | 9 | 10 => q(m * m * m - m, 6),
        11..=15 => Rational::from(2 * m * m - 5 * m - 6),
        _ => q(6 * m * m - 16 * m - 3, 3),
    }
}

/// Upper bound on `CC(x)` over all unicyclic graphs of order `n`.
pub fn eval_f2(n: usize) -> Rational {
    let m = n as i64;
    q(2 * m * m * m + 3 * m * m - 37 * m + 54, 6)
}

/// Largest `CC(x)` among unicyclic graphs with cycle length `l`.
pub fn cc_upper_nl(n: usize, l: usize) -> Rational {
    let (n, l) = (n as i64, l as i64);
    // l^3/2 - (4n+3) l^2 / 6 + n(2n^2+3n-1)/6
    q(
        3 * l * l * l - (4 * n + 3) * l * l + n * (2 * n * n + 3 * n - 1),
        6,
    )
}

/// Smallest `CC(x)` among unicyclic graphs with cycle length `l != n`,
/// `n >= 6`.
pub fn cc_lower_nl(n: usize, l: usize) -> Rational {
    let (n, l) = (n as i64, l as i64);
    // -l^3/6 + n l^2/3 + (7-12n) l/6 + n(6n-7)/3
    q(
        -l * l * l + 2 * n * l * l + (7 - 12 * n) * l + 2 * n * (6 * n - 7),
        6,
    )
}

/// Smallest `RC(x)` among unicyclic graphs with cycle length `l`.
pub fn rc_lower_nl(n: usize, l: usize) -> Rational {
    let (n, l) = (n as i64, l as i64);
    q(l * l * l - 7 * l + 6 * n, 6)
}

/// Largest `RC(x)` among unicyclic graphs with cycle length `l`.
pub fn rc_upper_nl(n: usize, l: usize) -> Rational {
    let (n, l) = (n as i64, l as i64);
    q(-3 * l * l * l + 3 * l * l + n * (n - 1) * (4 * n + 1), 6)
}

/// Smallest `RC(x)` over all unicyclic graphs of order `n`.
pub fn rc_lower_n(n: usize) -> Rational {
    Rational::from(n as i64 + 1)
}

/// Largest `RC(x)` over all unicyclic graphs of order `n`.
pub fn rc_upper_n(n: usize) -> Rational {
    let m = n as i64;
    q(m * (m - 1) * (4 * m + 1) - 54, 6)
}

/// Stated minimum of `cc_lower_nl(n, l)` over `3 <= l <= n - 1`, with the
/// cycle length said to attain it. Defined for `n >= 6`.
pub fn corollary_min(n: usize) -> Option<(Rational, usize)> {
    let m = n as i64;
    match n {
        0..=5 => None,
        6..=8 => Some((q(m * m * m - m * m + 4 * m - 6, 6), n - 1)),
        9..=15 => Some((Rational::from(2 * m * m - 5 * m - 6), 4)),
        _ => Some((q(6 * m * m - 16 * m - 3, 3), 3)),
    }
}

/// Bounds on `(2n - 1) D_T(v) - 2 W(T)` for a tree of order `n`.
pub fn lemma_2_4_bounds(n: usize) -> (Rational, Rational) {
    let m = n as i64;
    (Rational::from(m - 1), q(m * (m - 1) * (4 * m - 5), 6))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f1_and_f2_values() {
        assert_eq!(eval_f1(3), Rational::from(4i64));
        assert_eq!(eval_f1(4), q(29, 3));
        assert_eq!(eval_f1(5), Rational::from(19i64));
        assert_eq!(eval_f1(9), Rational::from(120i64));
        assert_eq!(eval_f1(11), Rational::from(2 * 121 - 55 - 6i64));
        assert_eq!(eval_f1(16), q(2 * 256 * 3 - 256 - 3, 3));
        assert_eq!(eval_f2(5), q(97, 3));
        assert_eq!(eval_f2(3), Rational::from(4i64));
    }

    #[test]
    fn polynomial_specializations() {
        for n in 5..=20usize {
            assert_eq!(cc_upper_nl(n, 3), eval_f2(n), "n={n}");
        }
        for n in 3..=40usize {
            let m = n as i64;
            assert_eq!(cc_upper_nl(n, n), q(m * m * m - m, 6));
            assert_eq!(rc_lower_nl(n, 3), Rational::from(m + 1));
            assert_eq!(rc_upper_nl(n, 3), rc_upper_n(n));
            assert_eq!(rc_lower_nl(n, n), q(m * m * m - m, 6));
        }
    }

    #[test]
    fn corollary_pieces() {
        assert_eq!(cc_lower_nl(9, 4), Rational::from(111i64));
        assert_eq!(cc_lower_nl(9, 5), Rational::from(111i64));
        assert_eq!(cc_lower_nl(9, 8), Rational::from(113i64));
        assert_eq!(cc_lower_nl(10, 4), Rational::from(144i64));
        assert_eq!(cc_lower_nl(10, 5), Rational::from(145i64));
        assert_eq!(corollary_min(16).unwrap().0, cc_lower_nl(16, 3));
        assert!(corollary_min(5).is_none());
    }

    #[test]
    fn lemma_bounds() {
        assert_eq!(
            lemma_2_4_bounds(6),
            (Rational::from(5i64), Rational::from(95i64))
        );
    }
}
