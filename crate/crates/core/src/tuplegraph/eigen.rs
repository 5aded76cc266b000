use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ratpoly::{rat, MPoly, Rat};

use super::cycles::enumerate_proper_cycles;
use super::tuple::{IndexTuple, SecondMin};

/// Global sign applied to the proper-cycle product.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SignConvention {
    /// The product as written, with no extra sign.
    Literal,
    /// The product times `(-1)^m`. Agrees with the jet oracle.
    #[default]
    Alternating,
}

impl SignConvention {
    pub const ALL: [SignConvention; 2] = [SignConvention::Literal, SignConvention::Alternating];

    pub fn name(self) -> &'static str {
        match self {
            SignConvention::Literal => "literal",
            SignConvention::Alternating => "alternating",
        }
    }
}

impl fmt::Display for SignConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SignConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "literal" => Ok(SignConvention::Literal),
            "alternating" => Ok(SignConvention::Alternating),
            _ => Err(Error::invalid(format!("unknown sign convention {s:?}"))),
        }
    }
}

/// One factor `-x_low + x_high (+ 1)`; a missing `high` stands for `x_inf = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LinearFactor {
    pub low: usize,
    pub high: Option<usize>,
    pub plus_one: bool,
}

impl LinearFactor {
    pub fn to_mpoly(&self, x: &impl Fn(usize) -> MPoly, nvars: usize) -> MPoly {
        let mut f = -x(self.low);
        if let Some(h) = self.high {
            f += &x(h);
        }
        if self.plus_one {
            f += &MPoly::one(nvars);
        }
        f
    }
}

/// Factored form of a nonzero elementary eigenvalue. Values referenced by the
/// factors are tuple entries (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleProduct {
    pub negate: bool,
    pub factors: Vec<LinearFactor>,
}

impl CycleProduct {
    /// Expands the product with `x(v)` standing for the parameter of value `v`.
    pub fn to_mpoly(&self, x: &impl Fn(usize) -> MPoly, nvars: usize) -> MPoly {
        let mut r = MPoly::one(nvars);
        for f in &self.factors {
            r = &r * &f.to_mpoly(x, nvars);
        }
        if self.negate {
            -r
        } else {
            r
        }
    }
}

/// Proper-cycle factorization of the eigenvalue of `t`, or `None` when some
/// entry is smaller than `i_1` (the eigenvalue vanishes).
pub fn cycle_product(t: &IndexTuple, sign: SignConvention) -> Option<CycleProduct> {
    let first = t.entries()[0];
    if t.entries().iter().any(|&v| v < first) {
        return None;
    }
    let factors = enumerate_proper_cycles(t)
        .into_iter()
        .map(|c| LinearFactor {
            low: c.v1,
            high: match c.v2 {
                SecondMin::Finite(v) => Some(v),
                SecondMin::Infinite => None,
            },
            plus_one: c.base != first,
        })
        .collect();
    let negate = sign == SignConvention::Alternating && t.m() % 2 == 1;
    Some(CycleProduct { negate, factors })
}

/// `alpha_v`, or the shifted `beta_v = alpha_v + (n + 1)/2 - v`, in `n` variables.
pub fn langlands_var(n: usize, v: usize, shifted: bool) -> MPoly {
    let a = MPoly::var(n, v - 1);
    if shifted {
        let shift: Rat = rat(n as i64 + 1, 2) - rat(v as i64, 1);
        &a + &MPoly::constant(n, shift)
    } else {
        a
    }
}

/// Eigenvalue of `D_{i1,i2} o ... o D_{im,i1}` on the power function, as a
/// polynomial in `alpha_1..alpha_n` (or in the shifted parameters).
pub fn elementary_eigenvalue(t: &IndexTuple, sign: SignConvention, shifted: bool) -> MPoly {
    let n = t.n();
    match cycle_product(t, sign) {
        None => MPoly::zero(n),
        Some(cp) => cp.to_mpoly(&|v| langlands_var(n, v, shifted), n),
    }
}
