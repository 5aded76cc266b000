use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::One;

use crate::error::{Error, Result};
use crate::ratpoly::{MPoly, Rat};
use crate::tuplegraph::EdgeSet;

/// Element of the multilinear algebra `Q[alpha][t_1..t_m] / (t_1^2, ..., t_m^2)`.
///
/// A monomial in the `t_j` is a subset of `{0..m}`; products of overlapping
/// subsets vanish. Coefficients are polynomials in `nvars` parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jet {
    m: usize,
    nvars: usize,
    coeffs: BTreeMap<EdgeSet, MPoly>,
}

impl Jet {
    pub fn zero(m: usize, nvars: usize) -> Self {
        assert!(m <= 32, "at most 32 jet variables");
        Jet {
            m,
            nvars,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(m: usize, nvars: usize) -> Self {
        Self::constant(m, MPoly::one(nvars))
    }

    pub fn constant(m: usize, c: MPoly) -> Self {
        let nvars = c.nvars();
        Self::monomial(m, 0, c).unwrap_or_else(|_| Self::zero(m, nvars))
    }

    /// The variable `t_j` (0-based).
    pub fn var(m: usize, nvars: usize, j: usize) -> Self {
        assert!(j < m, "jet variable {j} out of range");
        Self::monomial(m, 1 << j, MPoly::one(nvars)).expect("in range")
    }

    pub fn monomial(m: usize, set: EdgeSet, c: MPoly) -> Result<Self> {
        if m < 32 && set >> m != 0 {
            return Err(Error::invalid("jet monomial uses a variable beyond m"));
        }
        let mut j = Self::zero(m, c.nvars());
        if !c.is_zero() {
            j.coeffs.insert(set, c);
        }
        Ok(j)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, set: EdgeSet) -> MPoly {
        self.coeffs
            .get(&set)
            .cloned()
            .unwrap_or_else(|| MPoly::zero(self.nvars))
    }

    pub fn constant_term(&self) -> MPoly {
        self.coeff(0)
    }

    /// `t_1 ... t_m` coefficient.
    pub fn top_coeff(&self) -> MPoly {
        self.coeff(full_set(self.m))
    }

    pub fn terms(&self) -> impl Iterator<Item = (EdgeSet, &MPoly)> {
        self.coeffs.iter().map(|(s, c)| (*s, c))
    }

    /// Everything except the constant term.
    pub fn nilpotent_part(&self) -> Jet {
        let mut r = self.clone();
        r.coeffs.remove(&0);
        r
    }

    fn add_term(&mut self, set: EdgeSet, c: &MPoly) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&set) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.coeffs.remove(&set);
                }
            }
            None => {
                self.coeffs.insert(set, c.clone());
            }
        }
    }

    fn check(&self, other: &Jet) -> Result<()> {
        if self.m != other.m {
            return Err(Error::Arity {
                expected: self.m,
                got: other.m,
            });
        }
        if self.nvars != other.nvars {
            return Err(Error::Arity {
                expected: self.nvars,
                got: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Jet) -> Result<Jet> {
        self.check(other)?;
        let mut r = self.clone();
        for (s, c) in &other.coeffs {
            r.add_term(*s, c);
        }
        Ok(r)
    }

    pub fn checked_mul(&self, other: &Jet) -> Result<Jet> {
        self.check(other)?;
        let mut r = Jet::zero(self.m, self.nvars);
        for (sa, ca) in &self.coeffs {
            for (sb, cb) in &other.coeffs {
                if sa & sb == 0 {
                    r.add_term(sa | sb, &(ca * cb));
                }
            }
        }
        Ok(r)
    }

    pub fn scale(&self, c: &MPoly) -> Jet {
        let mut r = Jet::zero(self.m, self.nvars);
        for (s, v) in &self.coeffs {
            r.add_term(*s, &(v * c));
        }
        r
    }

    fn scale_rat(&self, c: &Rat) -> Jet {
        let mut r = Jet::zero(self.m, self.nvars);
        for (s, v) in &self.coeffs {
            r.add_term(*s, &v.scale(c));
        }
        r
    }
}

pub fn full_set(m: usize) -> EdgeSet {
    if m >= 32 {
        u32::MAX
    } else {
        (1u32 << m) - 1
    }
}

pub fn jet_mul(a: &Jet, b: &Jet) -> Result<Jet> {
    a.checked_mul(b)
}

/// Multiplicative inverse. The constant term must be a nonzero rational.
pub fn jet_inv(a: &Jet) -> Result<Jet> {
    let c0 = a.constant_term();
    if c0.is_zero() || !c0.is_constant() {
        return Err(Error::NotInvertible);
    }
    let inv_c = Rat::one() / c0.constant_term();
    // a = c (1 + nu)  =>  1/a = (1/c) sum_k (-nu)^k, terminating after m steps
    let minus_nu = a.nilpotent_part().scale_rat(&-inv_c.clone());
    let mut sum = Jet::one(a.m, a.nvars);
    let mut power = Jet::one(a.m, a.nvars);
    for _ in 0..a.m {
        power = &power * &minus_nu;
        if power.is_zero() {
            break;
        }
        sum = &sum + &power;
    }
    Ok(sum.scale_rat(&inv_c))
}

/// `a^beta` for `a = 1 + nu`: the binomial series `sum_k (beta)_k / k! nu^k`,
/// with `(beta)_k` the falling factorial. Terminates because `nu^(m+1) = 0`.
pub fn jet_pow(a: &Jet, beta: &MPoly) -> Result<Jet> {
    let c0 = a.constant_term();
    if c0 != MPoly::one(a.nvars) {
        return Err(Error::invalid("jet_pow needs constant term 1"));
    }
    if beta.nvars() != a.nvars {
        return Err(Error::Arity {
            expected: a.nvars,
            got: beta.nvars(),
        });
    }
    let nu = a.nilpotent_part();
    let mut sum = Jet::one(a.m, a.nvars);
    let mut power = Jet::one(a.m, a.nvars);
    let mut binom = MPoly::one(a.nvars);
    for k in 0..a.m {
        power = &power * &nu;
        if power.is_zero() {
            break;
        }
        // binom <- binom * (beta - k) / (k + 1)
        let step = beta - &MPoly::constant(a.nvars, Rat::from_integer(k.into()));
        binom = (&binom * &step).scale(&(Rat::one() / Rat::from_integer((k + 1).into())));
        sum = &sum + &power.scale(&binom);
    }
    Ok(sum)
}

impl Add for &Jet {
    type Output = Jet;
    fn add(self, rhs: &Jet) -> Jet {
        self.checked_add(rhs).expect("jet shape mismatch")
    }
}

impl Sub for &Jet {
    type Output = Jet;
    fn sub(self, rhs: &Jet) -> Jet {
        self.checked_add(&-rhs).expect("jet shape mismatch")
    }
}

impl Mul for &Jet {
    type Output = Jet;
    fn mul(self, rhs: &Jet) -> Jet {
        self.checked_mul(rhs).expect("jet shape mismatch")
    }
}

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet {
            m: self.m,
            nvars: self.nvars,
            coeffs: self.coeffs.iter().map(|(s, c)| (*s, -c)).collect(),
        }
    }
}

impl fmt::Display for Jet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (s, c) in &self.coeffs {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let vars: Vec<String> = (0..self.m)
                .filter(|j| s & (1 << j) != 0)
                .map(|j| format!("t{}", j + 1))
                .collect();
            if vars.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}
