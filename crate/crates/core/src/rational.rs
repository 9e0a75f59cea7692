//! Exact rationals.

use num_rational::Ratio;

use crate::error::{Error, Result};

pub type Q = Ratio<i64>;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

pub fn int(n: i64) -> Q {
    Q::from_integer(n)
}

/// Parses `a`, `-a` or `a/b`.
pub fn parse_q(s: &str) -> Result<Q> {
    let bad = || Error::InvalidArgument(format!("not a rational number: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => s.parse().map(int).map_err(|_| bad()),
    }
}

/// Lowest-terms text form, integers without a denominator.
pub fn fmt_q(x: &Q) -> String {
    x.to_string()
}

pub fn to_f64(x: &Q) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

/// Sorted copy, for multiset comparisons.
pub fn sorted(values: impl IntoIterator<Item = Q>) -> Vec<Q> {
    let mut v: Vec<Q> = values.into_iter().collect();
    v.sort();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_q("-6/4").unwrap(), q(-3, 2));
        assert_eq!(parse_q("7").unwrap(), int(7));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
        assert_eq!(fmt_q(&q(4, 6)), "2/3");
        assert_eq!(fmt_q(&q(-4, 2)), "-2");
    }
}
