//! The $q$-exponential map for nilpotent operators, and machine checks for
//! its inverse law, its shift identity, and its conjugation action on the
//! equitable generators.
//!
//! For a nilpotent operator `m` with smallest vanishing power `m^r = 0`, the
//! $q$-exponential and its companion are the finite sums
//!
//! ```text
//! exp_q(m)  = sum_{i=0}^{r-1}  q^{i(i-1)/2}        / [i]_q!  *  m^i
//! êxp_q(m)  = sum_{i=0}^{r-1}  (-1)^i q^{-i(i-1)/2} / [i]_q!  *  m^i
//! ```
//!
//! where `[i]_q! = [1]_q [2]_q ... [i]_q` is the $q$-factorial.  The two sums
//! are two-sided inverses of one another, and `exp_q` satisfies the shift
//! identity
//!
//! ```text
//! exp_q(q^2 m) (1 - (q^2 - 1) m) = exp_q(m).
//! ```
//!
//! On a type-1 module, conjugation by `exp_q(n_z)` permutes the equitable
//! generators in a controlled way; [`conjugation_checks`] verifies every one
//! of those conjugation identities with exact arithmetic, and
//! [`recurrence_checks`] verifies the bracket recurrence
//!
//! ```text
//! z n_z^i - n_z^i z = q^{1-i} [i]_q (n_z^{i-1} x - y n_z^{i-1})
//! ```
//!
//! for every exponent `i` up to the nilpotency index of `n_z`.

use crate::error::Result;
use crate::expr::GenSym;
use crate::linalg::Matrix;
use crate::module::Realization;
use crate::report::IdentityCheck;
use crate::scalar::{choose2, QContext, Rat};

/// The $q$-exponential `exp_q(m) = Σ_i q^{i(i-1)/2} m^i / [i]_q!` of a
/// nilpotent matrix.  The sum runs over `0 <= i < r` where `r` is the
/// nilpotency index of `m`; a non-nilpotent input is an error.
pub fn exp_q(m: &Matrix, ctx: &QContext) -> Result<Matrix> {
    let r = m.nilpotency_index()?;
    let powers = m.power_table(r - 1);
    let mut sum = Matrix::zeros(m.rows(), m.cols());
    for (i, p) in powers.iter().enumerate() {
        let coeff = ctx.q_pow(choose2(i)) / ctx.q_fact(i);
        sum = &sum + &p.scale(&coeff);
    }
    Ok(sum)
}

/// The companion sum `êxp_q(m) = Σ_i (-1)^i q^{-i(i-1)/2} m^i / [i]_q!`,
/// which is the two-sided inverse of [`exp_q`] applied to the same nilpotent
/// matrix.
pub fn exp_q_inverse(m: &Matrix, ctx: &QContext) -> Result<Matrix> {
    let r = m.nilpotency_index()?;
    let powers = m.power_table(r - 1);
    let mut sum = Matrix::zeros(m.rows(), m.cols());
    for (i, p) in powers.iter().enumerate() {
        let sign = if i % 2 == 0 { Rat::one() } else { -&Rat::one() };
        let coeff = sign * ctx.q_pow(-choose2(i)) / ctx.q_fact(i);
        sum = &sum + &p.scale(&coeff);
    }
    Ok(sum)
}

/// The $q$-exponential of the matrix realizing `sym` on a module.
pub fn exp_q_symbol(real: &Realization, sym: GenSym, ctx: &QContext) -> Result<Matrix> {
    exp_q(real.matrix(sym)?, ctx)
}

/// Diameter label used on checks: the largest diameter among the summands.
fn shape_label(real: &Realization) -> usize {
    real.shape().iter().copied().max().unwrap_or(0)
}

/// Inverse-law and shift-identity checks for `exp_q` applied to each of the
/// three nilpotent elements `n_x`, `n_y`, `n_z` on a module:
///
/// * `qexp/inv-*`: `exp_q(m) êxp_q(m) = 1` and `êxp_q(m) exp_q(m) = 1`;
/// * `qexp/shift-*`: `exp_q(q^2 m)(1 - (q^2 - 1)m) = exp_q(m)`.
pub fn exponential_checks(real: &Realization, ctx: &QContext) -> Vec<IdentityCheck> {
    let d = shape_label(real);
    let dim = real.dim();
    let mut out = Vec::new();
    for sym in [GenSym::Nx, GenSym::Ny, GenSym::Nz] {
        let label_inv = format!("qexp/inv-{}", sym.name());
        let label_shift = format!("qexp/shift-{}", sym.name());
        let body = || -> Result<Vec<IdentityCheck>> {
            let m = real.matrix(sym)?;
            let plus = exp_q(m, ctx)?;
            let minus = exp_q_inverse(m, ctx)?;
            let id = Matrix::identity(dim);
            let left_product = &plus * &minus;
            let right_product = &minus * &plus;
            let inv = if left_product == id {
                IdentityCheck::of_matrices(label_inv.clone(), d, &right_product, &id)
            } else {
                IdentityCheck::of_matrices(label_inv.clone(), d, &left_product, &id)
            };
            let scaled = m.scale(&ctx.q_pow(2));
            let corrector = &id - &m.scale(&(ctx.q_pow(2) - Rat::one()));
            let shift = IdentityCheck::of_matrices(
                label_shift.clone(),
                d,
                &(&exp_q(&scaled, ctx)? * &corrector),
                &plus,
            );
            Ok(vec![inv, shift])
        };
        match body() {
            Ok(list) => out.extend(list),
            Err(e) => {
                out.push(IdentityCheck::of_error(label_inv, d, &e));
                out.push(IdentityCheck::of_error(label_shift, d, &e));
            }
        }
    }
    out
}

/// Conjugation of the generators by `E = exp_q(n_z)` on a type-1 module.
/// With `E⁻¹` computed by Gaussian elimination (so the route is independent
/// of [`exp_q_inverse`]), the verified identities are:
///
/// ```text
/// E⁻¹ Λ  E = Λ                 E⁻¹ n_z E = n_z
/// E⁻¹ y  E = x⁻¹               E⁻¹ z   E = x - x⁻¹ + z
/// E⁻¹ x  E = x y x             E⁻¹ n_x E = x⁻¹ n_y x⁻¹
/// E⁻¹ n_y E = Λx/(q-q⁻¹) + n_y - (q+q⁻¹)/(q-q⁻¹) x² + x n_z x
/// (y + z) E = E (x + z)
/// ```
pub fn conjugation_checks(real: &Realization, ctx: &QContext) -> Vec<IdentityCheck> {
    let d = shape_label(real);
    match conjugation_checks_inner(real, ctx, d) {
        Ok(list) => list,
        Err(e) => vec![IdentityCheck::of_error("qexp/conjugation", d, &e)],
    }
}

fn conjugation_checks_inner(
    real: &Realization,
    ctx: &QContext,
    d: usize,
) -> Result<Vec<IdentityCheck>> {
    let x = real.matrix(GenSym::X)?;
    let y = real.matrix(GenSym::Y)?;
    let z = real.matrix(GenSym::Z)?;
    let nx = real.matrix(GenSym::Nx)?;
    let ny = real.matrix(GenSym::Ny)?;
    let nz = real.matrix(GenSym::Nz)?;
    let lam = real.matrix(GenSym::Casimir)?;
    let x_inv = x.inverse()?;
    let e = exp_q(nz, ctx)?;
    let e_inv = e.inverse()?;
    let conj = |g: &Matrix| &(&e_inv * g) * &e;

    let mut out = Vec::new();
    out.push(IdentityCheck::of_matrices("qexp/conj-lambda", d, &conj(lam), lam));
    out.push(IdentityCheck::of_matrices("qexp/conj-nz", d, &conj(nz), nz));
    out.push(IdentityCheck::of_matrices("qexp/conj-y", d, &conj(y), &x_inv));
    out.push(IdentityCheck::of_matrices(
        "qexp/conj-z",
        d,
        &conj(z),
        &(&(x - &x_inv) + z),
    ));
    out.push(IdentityCheck::of_matrices(
        "qexp/conj-x",
        d,
        &conj(x),
        &(&(x * y) * x),
    ));
    out.push(IdentityCheck::of_matrices(
        "qexp/conj-nx",
        d,
        &conj(nx),
        &(&(&x_inv * ny) * &x_inv),
    ));
    let c = ctx.q_minus_q_inv();
    let lam_x = (lam * x).scale(&c.inv());
    let x_sq = (x * x).scale(&(&(ctx.q_pow(1) + ctx.q_pow(-1)) / &c));
    let x_nz_x = &(x * nz) * x;
    let ny_rhs = &(&(&lam_x + ny) - &x_sq) + &x_nz_x;
    out.push(IdentityCheck::of_matrices("qexp/conj-ny", d, &conj(ny), &ny_rhs));
    out.push(IdentityCheck::of_matrices(
        "qexp/sum-swap",
        d,
        &(&(y + z) * &e),
        &(&e * &(x + z)),
    ));
    Ok(out)
}

/// The bracket recurrence `z n_z^i - n_z^i z = q^{1-i} [i]_q (n_z^{i-1} x - y n_z^{i-1})`
/// verified for each `i` from 1 up to the nilpotency index of `n_z` (past
/// that index both sides vanish identically).
pub fn recurrence_checks(real: &Realization, ctx: &QContext) -> Vec<IdentityCheck> {
    let d = shape_label(real);
    match recurrence_checks_inner(real, ctx, d) {
        Ok(list) => list,
        Err(e) => vec![IdentityCheck::of_error("qexp/rec", d, &e)],
    }
}

fn recurrence_checks_inner(
    real: &Realization,
    ctx: &QContext,
    d: usize,
) -> Result<Vec<IdentityCheck>> {
    let x = real.matrix(GenSym::X)?;
    let y = real.matrix(GenSym::Y)?;
    let z = real.matrix(GenSym::Z)?;
    let nz = real.matrix(GenSym::Nz)?;
    let r = nz.nilpotency_index()?;
    let powers = nz.power_table(r);
    let mut out = Vec::new();
    for i in 1..=r {
        let left = &(z * &powers[i]) - &(&powers[i] * z);
        let scale = ctx.q_pow(1 - i as i64) * ctx.q_int(i as i64);
        let right = (&(&powers[i - 1] * x) - &(y * &powers[i - 1])).scale(&scale);
        out.push(IdentityCheck::of_matrices(
            format!("qexp/rec-{i}"),
            d,
            &left,
            &right,
        ));
    }
    Ok(out)
}

/// Every check in this module, concatenated: inverse laws, shift identities,
/// conjugation identities, and the bracket recurrence.
pub fn all_checks(real: &Realization, ctx: &QContext) -> Vec<IdentityCheck> {
    let mut out = exponential_checks(real, ctx);
    out.extend(conjugation_checks(real, ctx));
    out.extend(recurrence_checks(real, ctx));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::BasisKind;
    use crate::scalar::{IdentKind, ThetaMode};

    fn ctx_q4() -> QContext {
        QContext::new(
            Rat::int(4),
            Rat::int(-2),
            ThetaMode::SqQ,
            0,
            IdentKind::Primary,
        )
        .unwrap()
    }

    #[test]
    fn exp_q_of_equitable_nz_on_two_dimensional_module_is_unitriangular() {
        let ctx = ctx_q4();
        let real = Realization::irreducible(&ctx, 1, BasisKind::Equitable).unwrap();
        let e = exp_q(real.matrix(GenSym::Nz).unwrap(), &ctx).unwrap();
        let expected = Matrix::new(
            2,
            2,
            vec![Rat::int(1), Rat::int(-1), Rat::int(0), Rat::int(1)],
        )
        .unwrap();
        assert_eq!(e, expected);
    }

    #[test]
    fn exp_q_of_jordan_block_matches_hand_computation() {
        let ctx = ctx_q4();
        let mut n = Matrix::zeros(3, 3);
        n.set_entry(0, 1, Rat::one());
        n.set_entry(1, 2, Rat::one());
        let e = exp_q(&n, &ctx).unwrap();
        // [2]_q! = 4 + 1/4 = 17/4 at q = 4, and the degree-2 coefficient is
        // q / [2]_q! = 16/17.
        assert_eq!(*e.entry(0, 2), Rat::frac(16, 17));
        assert_eq!(*e.entry(0, 1), Rat::one());
        assert_eq!(*e.entry(1, 2), Rat::one());
        assert_eq!(*e.entry(0, 0), Rat::one());
    }

    #[test]
    fn exp_q_rejects_a_non_nilpotent_matrix() {
        let ctx = ctx_q4();
        assert!(exp_q(&Matrix::identity(2), &ctx).is_err());
    }

    #[test]
    fn exp_q_inverse_is_the_two_sided_inverse_on_small_modules() {
        let ctx = ctx_q4();
        for d in 0..=4 {
            let real = Realization::irreducible(&ctx, d, BasisKind::Equitable).unwrap();
            for sym in [GenSym::Nx, GenSym::Ny, GenSym::Nz] {
                let m = real.matrix(sym).unwrap();
                let plus = exp_q(m, &ctx).unwrap();
                let minus = exp_q_inverse(m, &ctx).unwrap();
                assert_eq!(&plus * &minus, Matrix::identity(d + 1));
                assert_eq!(&minus * &plus, Matrix::identity(d + 1));
            }
        }
    }

    #[test]
    fn exponential_checks_pass_on_both_presentations() {
        let ctx = ctx_q4();
        for basis in [BasisKind::Chevalley, BasisKind::Equitable] {
            let real = Realization::irreducible(&ctx, 3, basis).unwrap();
            for check in exponential_checks(&real, &ctx) {
                assert!(check.pass, "{} failed: {:?}", check.identity, check.counterexample);
            }
        }
    }

    #[test]
    fn conjugation_checks_pass_on_irreducibles_and_direct_sums() {
        let ctx = ctx_q4();
        for basis in [BasisKind::Chevalley, BasisKind::Equitable] {
            for shape in [vec![0], vec![2], vec![1, 3]] {
                let real = Realization::new(&ctx, &shape, basis).unwrap();
                for check in conjugation_checks(&real, &ctx) {
                    assert!(
                        check.pass,
                        "{} failed on shape {:?}: {:?}",
                        check.identity, shape, check.counterexample
                    );
                }
            }
        }
    }

    #[test]
    fn recurrence_checks_pass_and_cover_every_exponent() {
        let ctx = ctx_q4();
        let real = Realization::irreducible(&ctx, 3, BasisKind::Equitable).unwrap();
        let checks = recurrence_checks(&real, &ctx);
        assert_eq!(checks.len(), 4);
        for check in checks {
            assert!(check.pass, "{} failed", check.identity);
        }
    }

    #[test]
    fn exp_q_preserves_block_diagonal_structure() {
        let ctx = ctx_q4();
        let real = Realization::new(&ctx, &[1, 2], BasisKind::Equitable).unwrap();
        let e = exp_q(real.matrix(GenSym::Nz).unwrap(), &ctx).unwrap();
        // Entries joining the two summands must vanish.
        for i in 0..2 {
            for j in 2..5 {
                assert!(e.entry(i, j).is_zero());
                assert!(e.entry(j, i).is_zero());
            }
        }
    }

    #[test]
    fn perturbed_module_is_reported_as_a_failure_not_a_panic() {
        let ctx = ctx_q4();
        let mut real = Realization::irreducible(&ctx, 2, BasisKind::Equitable).unwrap();
        real.perturb_generator(GenSym::Nz, 0, 1, Rat::one());
        let checks = all_checks(&real, &ctx);
        assert!(checks.iter().any(|c| !c.pass));
    }
}
