//! Laguerre-constellation characterization: the three-term recurrence, the
//! constant-sum condition, the structure relation and the two
//! Sturm–Liouville rewritings, all on the root-normalized sequence.

use num_traits::Zero;
use serde::Serialize;

use crate::arith::{div, fmt_rational, Rational};
use crate::error::{Error, Result};
use crate::families::{
    family_poly_root, linear_pearson, norm_ratio, recurrence_coeffs_root, root_c, FamilyId,
    ParamPoint,
};
use crate::poly::Poly;

/// Family/normalization pairs with a registered degree-one φ or φ*.
/// Meixner appears twice, once per root.
pub const LINEAR_PEARSON_VARIANTS: &[(FamilyId, usize)] = &[
    (FamilyId::L, 0),
    (FamilyId::C, 0),
    (FamilyId::M, 0),
    (FamilyId::M, 1),
    (FamilyId::BqL, 0),
    (FamilyId::LqL, 0),
    (FamilyId::SW, 0),
];

/// Normalized `p̂_m`, zero for `m < 0`.
pub fn hat(fam: FamilyId, root: usize, m: i64, th: &ParamPoint) -> Result<Poly> {
    if m < 0 {
        Ok(Poly::zero())
    } else {
        family_poly_root(fam, m as usize, th, true, root)
    }
}

/// `x p̂_n - (α_n p̂_{n+1} + β_n p̂_n + γ_n p̂_{n-1})`.
pub fn recurrence_residual(fam: FamilyId, root: usize, n: usize, th: &ParamPoint) -> Result<Poly> {
    let (a, b, g) = recurrence_coeffs_root(fam, root, n, th)?;
    let m = n as i64;
    let lhs = Poly::x() * hat(fam, root, m, th)?;
    let rhs = hat(fam, root, m + 1, th)?.scale(&a)
        + hat(fam, root, m, th)?.scale(&b)
        + hat(fam, root, m - 1, th)?.scale(&g);
    Ok(lhs - rhs)
}

/// The normalized sequence built from `p̂_0 = 1` by running the recurrence forward.
pub fn recurrence_forward(fam: FamilyId, root: usize, n_max: usize, th: &ParamPoint) -> Result<Vec<Poly>> {
    let mut out = vec![Poly::one()];
    for n in 0..n_max {
        let (a, b, g) = recurrence_coeffs_root(fam, root, n, th)?;
        let prev = if n == 0 { Poly::zero() } else { out[n - 1].clone() };
        let next = (&Poly::linear(Rational::from_integer(1.into()), -b) * &out[n]) - prev.scale(&g);
        let inv = div(&Rational::from_integer(1.into()), &a)?;
        out.push(next.scale(&inv));
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct LcReport {
    pub family: String,
    pub n_max: usize,
    /// `α_0 + β_0 + γ_0`
    pub constant: String,
    pub gamma0_zero: bool,
    /// First `n` whose sum differs from the constant.
    pub first_mismatch: Option<usize>,
    /// Root of the registered degree-one φ/φ*, when there is one.
    pub root: Option<String>,
    pub root_matches: Option<bool>,
    pub pass: bool,
}

/// The constant-sum test for an arbitrary coefficient source (the registry
/// rows, or a perturbed copy used as a negative control).
pub fn rc_condition<F>(label: &str, n_max: usize, coeffs: F, root: Option<Rational>) -> Result<LcReport>
where
    F: Fn(usize) -> Result<(Rational, Rational, Rational)>,
{
    let (a0, b0, g0) = coeffs(0)?;
    let constant = &a0 + &b0 + &g0;
    let mut first_mismatch = None;
    for n in 1..=n_max {
        let (a, b, g) = coeffs(n)?;
        if a + b + g != constant {
            first_mismatch = Some(n);
            break;
        }
    }
    let gamma0_zero = g0.is_zero();
    let root_matches = root.as_ref().map(|r| *r == constant);
    Ok(LcReport {
        family: label.to_string(),
        n_max,
        constant: fmt_rational(&constant),
        gamma0_zero,
        first_mismatch,
        root: root.as_ref().map(fmt_rational),
        root_matches,
        pass: gamma0_zero && first_mismatch.is_none() && root_matches != Some(false),
    })
}

/// Constant-sum membership test on the registered Table rows.
pub fn check_lc_membership(fam: FamilyId, root: usize, th: &ParamPoint, n_max: usize) -> Result<LcReport> {
    let c = if linear_pearson(fam, th)?.is_some() {
        Some(root_c(fam, root, th)?)
    } else {
        None
    };
    let label = if fam.root_count() > 1 { format!("{fam}#{root}") } else { fam.to_string() };
    rc_condition(&label, n_max, |n| recurrence_coeffs_root(fam, root, n, th), c)
}

fn require_linear(fam: FamilyId, th: &ParamPoint) -> Result<()> {
    if linear_pearson(fam, th)?.is_none() {
        return Err(Error::Unsupported(format!(
            "{fam} has no registered degree-one Pearson polynomial"
        )));
    }
    Ok(())
}

/// Both sides of `(x - c) p̂_n = α_n Δ_n p̂_n - γ_n Δ_n p̂_{n-1}` with monic φ.
pub fn structure_relation_sides(fam: FamilyId, root: usize, n: usize, th: &ParamPoint) -> Result<(Poly, Poly)> {
    require_linear(fam, th)?;
    let c = root_c(fam, root, th)?;
    let (a, _, g) = recurrence_coeffs_root(fam, root, n, th)?;
    let m = n as i64;
    let p = |i: i64| hat(fam, root, i, th);
    let lhs = Poly::linear(Rational::from_integer(1.into()), -c) * p(m)?;
    let rhs = (p(m + 1)? - p(m)?).scale(&a) - (p(m)? - p(m - 1)?).scale(&g);
    Ok((lhs, rhs))
}

pub fn check_structure_relation(fam: FamilyId, root: usize, n: usize, th: &ParamPoint) -> Result<Poly> {
    let (l, r) = structure_relation_sides(fam, root, n, th)?;
    Ok(l - r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SlForm {
    /// `φ p_n = d_n² ∇_n (c_n/d_n²) Δ_n p_n`
    SL1,
    /// `φ p_n = d_n² Δ_n (c_n/d_n²) ∇_n p_n`
    SL2,
}

/// Which recurrence coefficient sits inside the self-adjoint bracket.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlPlacement {
    /// `γ_n` inside the Δ-first form and `α_n` inside the ∇-first form.
    AsPrinted,
    /// `α_n` inside the Δ-first form and `γ_n` inside the ∇-first form,
    /// which is what expanding the recurrence produces.
    Consistent,
}

/// Both sides of a Sturm–Liouville form with every `d²` rewritten through
/// `ρ_n = d_n²/d_{n-1}² = γ_n/α_{n-1}`:
///
/// `d_n² ∇_n (c_n/d_n²) Δ_n p_n = c_n Δp_n - ρ_n c_{n-1} Δp_{n-1}` and
/// `d_n² Δ_n (c_n/d_n²) ∇_n p_n = (c_{n+1}/ρ_{n+1}) ∇p_{n+1} - c_n ∇p_n`.
pub fn sturm_liouville_sides(
    fam: FamilyId,
    root: usize,
    n: usize,
    th: &ParamPoint,
    form: SlForm,
    placement: SlPlacement,
) -> Result<(Poly, Poly)> {
    require_linear(fam, th)?;
    let c = root_c(fam, root, th)?;
    let m = n as i64;
    let p = |i: i64| hat(fam, root, i, th);
    let coef = |i: usize| -> Result<Rational> {
        let (a, _, g) = recurrence_coeffs_root(fam, root, i, th)?;
        Ok(match (form, placement) {
            (SlForm::SL1, SlPlacement::AsPrinted) | (SlForm::SL2, SlPlacement::Consistent) => g,
            _ => a,
        })
    };
    let lhs = Poly::linear(Rational::from_integer(1.into()), -c) * p(m)?;
    let rhs = match form {
        SlForm::SL1 => {
            let first = (p(m + 1)? - p(m)?).scale(&coef(n)?);
            if n == 0 {
                // ρ_0 c_{-1} carries the factor γ_0 = 0
                first
            } else {
                let rho = norm_ratio(fam, root, n, th)?;
                first - (p(m)? - p(m - 1)?).scale(&(rho * coef(n - 1)?))
            }
        }
        SlForm::SL2 => {
            let rho = norm_ratio(fam, root, n + 1, th)?;
            let outer = div(&coef(n + 1)?, &rho)?;
            (p(m + 1)? - p(m)?).scale(&outer) - (p(m)? - p(m - 1)?).scale(&coef(n)?)
        }
    };
    Ok((lhs, rhs))
}

/// Residual of the ratio-reduced Sturm–Liouville form (consistent placement).
pub fn check_sturm_liouville(fam: FamilyId, root: usize, n: usize, th: &ParamPoint, form: SlForm) -> Result<Poly> {
    let (l, r) = sturm_liouville_sides(fam, root, n, th, form, SlPlacement::Consistent)?;
    Ok(l - r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, Symbol};

    fn lag(a: Rational) -> ParamPoint {
        ParamPoint::from_pairs([(Symbol::Alpha, a)])
    }

    #[test]
    fn laguerre_membership_constant_is_root() {
        let r = check_lc_membership(FamilyId::L, 0, &lag(int(1)), 20).unwrap();
        assert!(r.pass);
        assert_eq!(r.constant, "0");
        assert_eq!(r.root_matches, Some(true));
    }

    #[test]
    fn big_q_laguerre_membership() {
        let th = ParamPoint::from_pairs([
            (Symbol::A, rat(1, 3)),
            (Symbol::B, rat(1, 5)),
            (Symbol::Q, int(2)),
        ]);
        let r = check_lc_membership(FamilyId::BqL, 0, &th, 20).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.constant, "1");
    }

    #[test]
    fn perturbed_gamma_fails_at_first_index() {
        let th = lag(int(1));
        let r = rc_condition(
            "L+1",
            20,
            |n| {
                let (a, b, g) = recurrence_coeffs_root(FamilyId::L, 0, n, &th)?;
                Ok((a, b, if n >= 1 { g + int(1) } else { g }))
            },
            Some(int(0)),
        )
        .unwrap();
        assert!(!r.pass);
        assert_eq!(r.first_mismatch, Some(1));
    }

    #[test]
    fn structure_relation_examples() {
        assert!(check_structure_relation(FamilyId::L, 0, 0, &lag(rat(1, 2))).unwrap().is_zero());
        let ch = ParamPoint::from_pairs([(Symbol::A, int(2))]);
        assert!(check_structure_relation(FamilyId::C, 0, 3, &ch).unwrap().is_zero());
        let mx = ParamPoint::from_pairs([(Symbol::Beta, int(3)), (Symbol::C, rat(1, 2))]);
        assert!(check_structure_relation(FamilyId::M, 1, 2, &mx).unwrap().is_zero());
    }

    #[test]
    fn sturm_liouville_examples() {
        assert!(check_sturm_liouville(FamilyId::L, 0, 1, &lag(int(0)), SlForm::SL1).unwrap().is_zero());
        let ch = ParamPoint::from_pairs([(Symbol::A, int(3))]);
        assert!(check_sturm_liouville(FamilyId::C, 0, 2, &ch, SlForm::SL2).unwrap().is_zero());
        // the two forms have identical right-hand sides
        let th = lag(rat(2, 7));
        for n in 0..6 {
            let (_, a) = sturm_liouville_sides(FamilyId::L, 0, n, &th, SlForm::SL1, SlPlacement::Consistent).unwrap();
            let (_, b) = sturm_liouville_sides(FamilyId::L, 0, n, &th, SlForm::SL2, SlPlacement::Consistent).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn forward_recurrence_reproduces_series() {
        let th = lag(rat(-1, 3));
        let fw = recurrence_forward(FamilyId::L, 0, 6, &th).unwrap();
        for (n, p) in fw.iter().enumerate() {
            assert_eq!(*p, hat(FamilyId::L, 0, n as i64, &th).unwrap());
        }
    }

    #[test]
    fn families_without_linear_pearson_are_rejected() {
        let th = ParamPoint::from_pairs([(Symbol::Alpha, rat(1, 3)), (Symbol::Q, int(3))]);
        assert!(check_structure_relation(FamilyId::QL, 0, 1, &th).is_err());
        let r = check_lc_membership(FamilyId::QL, 0, &th, 10).unwrap();
        assert!(r.pass);
        assert_eq!(r.root, None);
    }
}
