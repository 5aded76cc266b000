//! Exact interpolation of power-sum coefficients as polynomials in the rank `n`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::bigint::BigInt;
use num::integer::Integer;
use num::{One, Signed, Zero};

use super::powersum::{Partition, PowerSumPoly};
use super::rat::Rat;
use crate::error::{Error, Result};

/// Univariate polynomial in `n`, coefficients in ascending powers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UPoly(Vec<Rat>);

impl UPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly(coeffs)
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.0.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    /// Lagrange interpolation through `points`; the abscissae must be distinct.
    pub fn lagrange(points: &[(Rat, Rat)]) -> UPoly {
        let k = points.len();
        let mut acc = vec![Rat::zero(); k.max(1)];
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            // basis = prod_{j != i} (x - xj) / (xi - xj)
            let mut basis = vec![Rat::one()];
            let mut denom = Rat::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let mut next = vec![Rat::zero(); basis.len() + 1];
                for (d, c) in basis.iter().enumerate() {
                    next[d + 1] += c;
                    next[d] -= c * xj;
                }
                basis = next;
                denom *= xi - xj;
            }
            let scale = yi / denom;
            for (d, c) in basis.iter().enumerate() {
                acc[d] += c * &scale;
            }
        }
        UPoly::new(acc)
    }

    /// Splits `self` as `sign * (g / d) * Q(n)` with `Q` primitive over `Z`
    /// and a positive leading coefficient, and renders it as text.
    /// Returns `(negative, body)`.
    fn render(&self) -> (bool, String) {
        if self.is_zero() {
            return (false, "0".to_string());
        }
        let d = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|c| (c * Rat::from_integer(d.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let negative = ints.last().unwrap().is_negative();
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
        let prim: Vec<BigInt> = if negative {
            prim.into_iter().map(|c| -c).collect()
        } else {
            prim
        };
        let nonzero: Vec<(usize, &BigInt)> = prim
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();

        let mut body = if nonzero.len() == 1 {
            let (k, _) = nonzero[0];
            match (g.is_one(), k) {
                (_, 0) => g.to_string(),
                (true, _) => n_power(k),
                (false, _) => format!("{g}{}", n_power(k)),
            }
        } else {
            let mut q = String::new();
            for (idx, (k, c)) in nonzero.iter().rev().enumerate() {
                let neg = c.is_negative();
                if idx > 0 {
                    q.push_str(if neg { " - " } else { " + " });
                } else if neg {
                    q.push('-');
                }
                let a = c.abs();
                if *k == 0 {
                    q.push_str(&a.to_string());
                } else if a.is_one() {
                    q.push_str(&n_power(*k));
                } else {
                    q.push_str(&format!("{a}{}", n_power(*k)));
                }
            }
            if g.is_one() {
                format!("({q})")
            } else {
                format!("{g}({q})")
            }
        };
        if !d.is_one() {
            body.push_str(&format!("/{d}"));
        }
        (negative, body)
    }
}

fn n_power(k: usize) -> String {
    if k == 1 {
        "n".to_string()
    } else {
        format!("n^{k}")
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (neg, body) = self.render();
        if neg {
            f.write_str("-")?;
        }
        f.write_str(&body)
    }
}

/// Power-sum expression whose coefficients are polynomials in the rank `n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClosedForm {
    coeffs: BTreeMap<Partition, UPoly>,
}

impl ClosedForm {
    pub fn from_coeffs<I: IntoIterator<Item = (Partition, UPoly)>>(it: I) -> Self {
        ClosedForm {
            coeffs: it.into_iter().filter(|(_, u)| !u.is_zero()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, p: &Partition) -> UPoly {
        self.coeffs.get(p).cloned().unwrap_or_default()
    }

    /// Heaviest partition first, constant term last.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &UPoly)> {
        self.coeffs.iter().rev()
    }

    pub fn eval(&self, n: u64) -> PowerSumPoly {
        let x = Rat::from_integer(BigInt::from(n));
        PowerSumPoly::from_coeffs(self.coeffs.iter().map(|(p, u)| (p.clone(), u.eval(&x))))
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (p, u)) in self.terms().enumerate() {
            let (neg, body) = u.render();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if p.is_empty() {
                f.write_str(&body)?;
            } else if body == "1" {
                write!(f, "{p}")?;
            } else if !body.contains('/') {
                write!(f, "{body} {p}")?;
            } else {
                write!(f, "({body}) {p}")?;
            }
        }
        Ok(())
    }
}

/// Interpolates every partition coefficient across the samples as a
/// polynomial in `n` of degree at most `degree_bound`.
///
/// The first `degree_bound + 1` samples determine the polynomial; every
/// further sample must be reproduced exactly.
pub fn interpolate_in_n(
    samples: &[(u64, PowerSumPoly)],
    degree_bound: usize,
) -> Result<ClosedForm> {
    if samples.len() < degree_bound + 1 {
        return Err(Error::invalid(format!(
            "{} samples cannot determine a degree {degree_bound} polynomial",
            samples.len()
        )));
    }
    let distinct: BTreeSet<u64> = samples.iter().map(|(n, _)| *n).collect();
    if distinct.len() != samples.len() {
        return Err(Error::invalid("sample ranks must be distinct"));
    }
    let support: BTreeSet<Partition> = samples
        .iter()
        .flat_map(|(_, q)| q.partitions().cloned())
        .collect();

    let (fit, check) = samples.split_at(degree_bound + 1);
    let mut coeffs = Vec::new();
    for p in support {
        let points: Vec<(Rat, Rat)> = fit
            .iter()
            .map(|(n, q)| (Rat::from_integer(BigInt::from(*n)), q.coeff(&p)))
            .collect();
        let u = UPoly::lagrange(&points);
        for (n, q) in check {
            if u.eval(&Rat::from_integer(BigInt::from(*n))) != q.coeff(&p) {
                return Err(Error::InterpolationInconsistent {
                    partition: p.to_string(),
                    n: *n,
                });
            }
        }
        coeffs.push((p, u));
    }
    Ok(ClosedForm::from_coeffs(coeffs))
}
