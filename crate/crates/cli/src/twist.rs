//! Twist knots `K_{p,2}` from the closed-form correction terms.

use std::fmt::Write as _;

use concordance_core::obstruct::{prime_factors, twist_d_value, twist_family_independent};
use concordance_core::rational::fmt_q;
use num_traits::Zero;
use serde::Serialize;

use crate::{CliError, Format, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub p: u64,
    pub prime: u64,
    /// `D_prime(K_{p,2})`.
    pub value: String,
    /// Whether `prime` divides no other member of the family.
    pub separating: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistReport {
    pub ps: Vec<u64>,
    pub independent: bool,
    pub witnesses: Vec<Witness>,
}

pub fn twist_report(ps: &[u64]) -> Result<TwistReport> {
    if ps.is_empty() {
        return Err(CliError::Input("give at least one twist parameter".into()));
    }
    let independent = twist_family_independent(ps)?;
    let mut witnesses = Vec::new();
    for (i, &p) in ps.iter().enumerate() {
        for prime in prime_factors(p) {
            let value = twist_d_value(p, prime)?;
            let separating = ps.iter().enumerate().all(|(j, &pj)| j == i || pj % prime != 0);
            witnesses.push(Witness { p, prime, value: fmt_q(&value), separating });
        }
    }
    Ok(TwistReport { ps: ps.to_vec(), independent, witnesses })
}

pub fn render_twist(r: &TwistReport, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => return serde_json::to_string_pretty(r).expect("twist report serializes") + "\n",
        Format::Csv => {
            let _ = writeln!(out, "p,prime,value,separating");
            for w in &r.witnesses {
                let _ = writeln!(out, "{},{},{},{}", w.p, w.prime, w.value, w.separating);
            }
        }
        Format::Table => {
            let _ = writeln!(out, "{:>6}  {:>6}  {:>12}  separating", "p", "prime", "D");
            for w in &r.witnesses {
                let _ = writeln!(out, "{:>6}  {:>6}  {:>12}  {}", w.p, w.prime, w.value, w.separating);
            }
            let _ = writeln!(out, "independent: {}", r.independent);
        }
    }
    out
}

/// Whether a witness certifies its knot.
pub fn certifies(w: &Witness) -> bool {
    w.separating && !concordance_core::rational::parse_q(&w.value).map_or(true, |v| v.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_reports() {
        let r = twist_report(&[21, 55]).unwrap();
        assert!(r.independent);
        assert!(r.witnesses.iter().filter(|w| w.p == 21).any(certifies));
        assert!(!twist_report(&[9]).unwrap().independent);
        assert!(twist_report(&[]).is_err());
        assert!(twist_report(&[4]).is_err());
    }
}
