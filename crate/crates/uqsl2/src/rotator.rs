//! The cap operators `X, Y, Z`, the standard polynomial, the standard
//! rotator `Ω`, the weight-space operator `Υ`, the uniform rotator `𝔯`, and
//! the `τ` maps — together with exact checks for all of their structural
//! identities.
//!
//! On an irreducible type-1 module of diameter `d`, each of `x, y, z` is
//! diagonalizable with eigenvalues `q^{d-2i}` (`0 <= i <= d`).  The *standard
//! polynomial* `G = G_d` is the interpolant
//!
//! ```text
//! G(q^{d-2i}) = q^{2i(d-i)}        (0 <= i <= d),
//! ```
//!
//! which automatically also satisfies `G(q^{2i-d}) = q^{2i(d-i)}`.  The cap
//! operators are `X = G(x) = G(x⁻¹)`, `Y = G(y) = G(y⁻¹)`, `Z = G(z) = G(z⁻¹)`.
//!
//! The standard rotator is `Ω = exp_q(n_x) Y exp_q(n_z)`; it cycles the
//! equitable generators `x → y → z → x` under conjugation, equals eight
//! further products built from the caps and the `q`-exponentials, and cubes
//! to the scalar `(-1)^d q^{d(d-1)}`.
//!
//! `Υ` acts on each weight space `V(λ)` as `q^{-λ²/2}` (well defined since
//! `λ²` and `λ` have the same parity), and `𝔯 = exp_q(n_x) Υ exp_q(n_z)`
//! extends the rotator action to arbitrary type-1 direct sums, restricting
//! to `q^{-d²/2} Ω` on each irreducible summand.
//!
//! The maps `τ_x = exp_q(n_y) Ω`, `τ_y = exp_q(n_z) Ω`, `τ_z = exp_q(n_x) Ω`
//! satisfy the alternative forms `τ_x = Ω exp_q(n_z)` (cyclically), the
//! conjugation triple `τ_y⁻¹ n_x τ_y = y⁻¹ n_z y⁻¹`, `τ_y⁻¹ y τ_y = y⁻¹`,
//! `τ_y⁻¹ n_z τ_y = n_x`, the cap recovery `Y = Ω³ τ_y⁻²` (cyclically), and
//! flip each weight space `V(λ)` onto `V(-λ)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::GenSym;
use crate::linalg::{lagrange_interpolate, Matrix, PolyCoeffs};
use crate::module::Realization;
use crate::qexp::exp_q;
use crate::report::IdentityCheck;
use crate::scalar::{QContext, Rat, ThetaMode};

/// The standard polynomial `G_d`: the Lagrange interpolant of degree at most
/// `d` through the points `(q^{d-2i}, q^{2i(d-i)})` for `0 <= i <= d`.
pub fn standard_polynomial(d: usize, ctx: &QContext) -> Result<PolyCoeffs> {
    let d_i = d as i64;
    let nodes: Vec<Rat> = (0..=d_i).map(|i| ctx.q_pow(d_i - 2 * i)).collect();
    let values: Vec<Rat> = (0..=d_i).map(|i| ctx.q_pow(2 * i * (d_i - i))).collect();
    lagrange_interpolate(&nodes, &values)
}

/// The cap operators on one irreducible module, together with the standard
/// polynomial that produces them.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CapOperators {
    pub g: PolyCoeffs,
    pub x_cap: Matrix,
    pub y_cap: Matrix,
    pub z_cap: Matrix,
}

/// Computes `X = G(x)`, `Y = G(y)`, `Z = G(z)` on an irreducible module and
/// cross-checks each against the reflected form `G(g⁻¹)`; a mismatch is an
/// internal inconsistency, not a verification outcome.
pub fn cap_operators(real: &Realization, ctx: &QContext) -> Result<CapOperators> {
    let d = real.single_diameter()?;
    let g = standard_polynomial(d, ctx)?;
    let mut caps = Vec::with_capacity(3);
    for sym in [GenSym::X, GenSym::Y, GenSym::Z] {
        let m = real.matrix(sym)?;
        let direct = g.eval_matrix(m)?;
        let reflected = g.eval_matrix(&m.inverse()?)?;
        if direct != reflected {
            return Err(Error::Inconsistent(format!(
                "standard polynomial disagrees on {} and its inverse (d = {d})",
                sym.name()
            )));
        }
        caps.push(direct);
    }
    let z_cap = caps.pop().expect("three caps");
    let y_cap = caps.pop().expect("three caps");
    let x_cap = caps.pop().expect("three caps");
    Ok(CapOperators { g, x_cap, y_cap, z_cap })
}

/// The standard rotator `Ω = exp_q(n_x) Y exp_q(n_z)` on an irreducible
/// type-1 module.
pub fn standard_rotator(real: &Realization, ctx: &QContext) -> Result<Matrix> {
    let caps = cap_operators(real, ctx)?;
    let ex = exp_q(real.matrix(GenSym::Nx)?, ctx)?;
    let ez = exp_q(real.matrix(GenSym::Nz)?, ctx)?;
    Ok(&(&ex * &caps.y_cap) * &ez)
}

/// All nine product expressions for the standard rotator, in a fixed order
/// starting with the defining one:
///
/// ```text
/// 1. exp_q(n_x) Y exp_q(n_z)        4. exp_q(n_x) exp_q(n_z) X        7. Z exp_q(n_x) exp_q(n_z)
/// 2. exp_q(n_y) Z exp_q(n_x)        5. exp_q(n_y) exp_q(n_x) Y        8. X exp_q(n_y) exp_q(n_x)
/// 3. exp_q(n_z) X exp_q(n_y)        6. exp_q(n_z) exp_q(n_y) Z        9. Y exp_q(n_z) exp_q(n_y)
/// ```
pub fn rotator_product_forms(real: &Realization, ctx: &QContext) -> Result<Vec<Matrix>> {
    let caps = cap_operators(real, ctx)?;
    let ex = exp_q(real.matrix(GenSym::Nx)?, ctx)?;
    let ey = exp_q(real.matrix(GenSym::Ny)?, ctx)?;
    let ez = exp_q(real.matrix(GenSym::Nz)?, ctx)?;
    let (cx, cy, cz) = (&caps.x_cap, &caps.y_cap, &caps.z_cap);
    Ok(vec![
        &(&ex * cy) * &ez,
        &(&ey * cz) * &ex,
        &(&ez * cx) * &ey,
        &(&ex * &ez) * cx,
        &(&ey * &ex) * cy,
        &(&ez * &ey) * cz,
        &(cz * &ex) * &ez,
        &(cx * &ey) * &ex,
        &(cy * &ez) * &ey,
    ])
}

/// The rotator law and cube scalar for `Ω` on an irreducible module:
/// `Ω⁻¹xΩ = y`, `Ω⁻¹yΩ = z`, `Ω⁻¹zΩ = x`, and `Ω³ = (-1)^d q^{d(d-1)} I`.
pub fn rotator_law_checks(real: &Realization, ctx: &QContext) -> Vec<IdentityCheck> {
    let d = real.shape().iter().copied().max().unwrap_or(0);
    let body = || -> Result<Vec<IdentityCheck>> {
        let d = real.single_diameter()?;
        let omega = standard_rotator(real, ctx)?;
        let mut out = cyclic_law_checks("rot/law", d, real, &omega)?;
        let d_i = d as i64;
        let sign = if d % 2 == 1 { -Rat::one() } else { Rat::one() };
        let expected = sign * ctx.q_pow(d_i * (d_i - 1));
        out.push(IdentityCheck::of_matrices(
            "rot/cube",
            d,
            &omega.pow(3),
            &Matrix::scalar(real.dim(), &expected),
        ));
        Ok(out)
    };
    body().unwrap_or_else(|e| vec![IdentityCheck::of_error("rot/law", d, &e)])
}

/// Shared rotator-law triple `R⁻¹xR = y`, `R⁻¹yR = z`, `R⁻¹zR = x`.
fn cyclic_law_checks(
    prefix: &str,
    d: usize,
    real: &Realization,
    r: &Matrix,
) -> Result<Vec<IdentityCheck>> {
    let r_inv = r.inverse()?;
    let conj = |g: &Matrix| &(&r_inv * g) * r;
    let x = real.matrix(GenSym::X)?;
    let y = real.matrix(GenSym::Y)?;
    let z = real.matrix(GenSym::Z)?;
    Ok(vec![
        IdentityCheck::of_matrices(format!("{prefix}-x"), d, &conj(x), y),
        IdentityCheck::of_matrices(format!("{prefix}-y"), d, &conj(y), z),
        IdentityCheck::of_matrices(format!("{prefix}-z"), d, &conj(z), x),
    ])
}

/// Entrywise agreement of product forms 2–9 with the defining form 1.
pub fn product_form_checks(real: &Realization, ctx: &QContext) -> Vec<IdentityCheck> {
    let d = real.shape().iter().copied().max().unwrap_or(0);
    match rotator_product_forms(real, ctx) {
        Ok(forms) => forms[1..]
            .iter()
            .enumerate()
            .map(|(i, form)| {
                IdentityCheck::of_matrices(format!("rot/form-{}", i + 2), d, form, &forms[0])
            })
            .collect(),
        Err(e) => vec![IdentityCheck::of_error("rot/forms", d, &e)],
    }
}

/// Conjugation identities tying `Ω`, the caps, and the nilpotent elements
/// together on an irreducible module:
///
/// * `rot/nconj-*`:    `Ω⁻¹ n_x Ω = n_y`, `Ω⁻¹ n_y Ω = n_z`, `Ω⁻¹ n_z Ω = n_x`;
/// * `rot/expconj-*`:  the same cycle applied to `exp_q(n_x), exp_q(n_y), exp_q(n_z)`;
/// * `rot/capconj-*`:  `Ω⁻¹ X Ω = Y`, `Ω⁻¹ Y Ω = Z`, `Ω⁻¹ Z Ω = X`;
/// * `rot/nz-y-to-x`:  `exp_q(n_z)⁻¹ Y exp_q(n_z) = X`;
/// * `rot/ycap-*`:     `Yy = yY`, `Y⁻¹ n_x Y = y⁻¹ n_x y⁻¹`, `Y n_x Y⁻¹ = y n_x y`,
///                     `Y⁻¹ n_z Y = y n_z y`, `Y n_z Y⁻¹ = y⁻¹ n_z y⁻¹`;
/// * `rot/ycap-weights`: `Y` acts on `V(λ)` as `q^{(d²-λ²)/2}`.
pub fn conjugation_checks(real: &Realization, ctx: &QContext) -> Vec<IdentityCheck> {
    let d = real.shape().iter().copied().max().unwrap_or(0);
    conjugation_checks_inner(real, ctx)
        .unwrap_or_else(|e| vec![IdentityCheck::of_error("rot/conjugations", d, &e)])
}

fn conjugation_checks_inner(real: &Realization, ctx: &QContext) -> Result<Vec<IdentityCheck>> {
    let d = real.single_diameter()?;
    let caps = cap_operators(real, ctx)?;
    let omega = standard_rotator(real, ctx)?;
    let omega_inv = omega.inverse()?;
    let conj = |g: &Matrix| &(&omega_inv * g) * &omega;

    let nx = real.matrix(GenSym::Nx)?;
    let ny = real.matrix(GenSym::Ny)?;
    let nz = real.matrix(GenSym::Nz)?;
    let y = real.matrix(GenSym::Y)?;
    let y_inv = real.matrix(GenSym::YInv)?;

    let mut out = vec![
        IdentityCheck::of_matrices("rot/nconj-nx", d, &conj(nx), ny),
        IdentityCheck::of_matrices("rot/nconj-ny", d, &conj(ny), nz),
        IdentityCheck::of_matrices("rot/nconj-nz", d, &conj(nz), nx),
    ];

    let ex = exp_q(nx, ctx)?;
    let ey = exp_q(ny, ctx)?;
    let ez = exp_q(nz, ctx)?;
    out.push(IdentityCheck::of_matrices("rot/expconj-nx", d, &conj(&ex), &ey));
    out.push(IdentityCheck::of_matrices("rot/expconj-ny", d, &conj(&ey), &ez));
    out.push(IdentityCheck::of_matrices("rot/expconj-nz", d, &conj(&ez), &ex));

    out.push(IdentityCheck::of_matrices("rot/capconj-x", d, &conj(&caps.x_cap), &caps.y_cap));
    out.push(IdentityCheck::of_matrices("rot/capconj-y", d, &conj(&caps.y_cap), &caps.z_cap));
    out.push(IdentityCheck::of_matrices("rot/capconj-z", d, &conj(&caps.z_cap), &caps.x_cap));

    out.push(IdentityCheck::of_matrices(
        "rot/nz-y-to-x",
        d,
        &(&(&ez.inverse()? * &caps.y_cap) * &ez),
        &caps.x_cap,
    ));

    let y_cap = &caps.y_cap;
    let y_cap_inv = y_cap.inverse()?;
    out.push(IdentityCheck::of_matrices(
        "rot/ycap-commutes",
        d,
        &(y_cap * y),
        &(y * y_cap),
    ));
    out.push(IdentityCheck::of_matrices(
        "rot/ycap-nx",
        d,
        &(&(&y_cap_inv * nx) * y_cap),
        &(&(y_inv * nx) * y_inv),
    ));
    out.push(IdentityCheck::of_matrices(
        "rot/ycap-nx-inv",
        d,
        &(&(y_cap * nx) * &y_cap_inv),
        &(&(y * nx) * y),
    ));
    out.push(IdentityCheck::of_matrices(
        "rot/ycap-nz",
        d,
        &(&(&y_cap_inv * nz) * y_cap),
        &(&(y * nz) * y),
    ));
    out.push(IdentityCheck::of_matrices(
        "rot/ycap-nz-inv",
        d,
        &(&(y_cap * nz) * &y_cap_inv),
        &(&(y_inv * nz) * y_inv),
    ));

    let mut weight_expected = Matrix::zeros(real.dim(), real.dim());
    for lambda in real.weights().lambdas() {
        let scalar = ctx.q_half_power((d as i64) * (d as i64) - lambda * lambda);
        weight_expected = &weight_expected + &real.weights().projector(lambda).scale(&scalar);
    }
    out.push(IdentityCheck::of_matrices("rot/ycap-weights", d, y_cap, &weight_expected));
    Ok(out)
}

/// The operator `Υ`: diagonal in the weight basis, acting on `V(λ)` as
/// `q^{-λ²/2} = (q^{1/2})^{-λ²}` with the stored square root of `q`.
/// Defined on arbitrary type-1 modules.
pub fn upsilon(real: &Realization, ctx: &QContext) -> Result<Matrix> {
    let mut m = Matrix::zeros(real.dim(), real.dim());
    for i in 0..real.dim() {
        let lambda = real.weights().weight_of(i).ok_or_else(|| {
            Error::Inconsistent(format!("basis index {i} carries no weight"))
        })?;
        m.set_entry(i, i, ctx.q_half_power(-lambda * lambda));
    }
    Ok(m)
}

/// The uniform rotator `𝔯 = exp_q(n_x) Υ exp_q(n_z)` on an arbitrary type-1
/// module.
pub fn frak_r(real: &Realization, ctx: &QContext) -> Result<Matrix> {
    let ex = exp_q(real.matrix(GenSym::Nx)?, ctx)?;
    let ez = exp_q(real.matrix(GenSym::Nz)?, ctx)?;
    Ok(&(&ex * &upsilon(real, ctx)?) * &ez)
}

/// Checks for `Υ` and `𝔯` that make sense on any type-1 module:
///
/// * `rot/frakr-law-*`: `𝔯` satisfies the rotator law;
/// * `rot/frakr-blocks`: `𝔯` preserves every summand of a direct sum;
/// * `rot/frakr-block-scalar-i`: on summand `i` (diameter `d_i`), `𝔯`
///   restricts to `q^{-d_i²/2} Ω_i`;
/// * on irreducibles additionally `rot/upsilon-vs-y` (`Y = q^{d²/2} Υ`),
///   `rot/frakr-scalar` (`𝔯 Ω⁻¹` is the scalar `q^{-d²/2}`), and
///   `rot/sqrt-q` (`q^{d²/2}` equals `(-1)^d θ^{d²}` or `θ^{-d²}` according
///   to whether `θ² = q` or `θ² = q⁻¹`).
pub fn frak_r_checks(real: &Realization, ctx: &QContext) -> Vec<IdentityCheck> {
    let d_label = real.shape().iter().copied().max().unwrap_or(0);
    frak_r_checks_inner(real, ctx)
        .unwrap_or_else(|e| vec![IdentityCheck::of_error("rot/frakr", d_label, &e)])
}

fn frak_r_checks_inner(real: &Realization, ctx: &QContext) -> Result<Vec<IdentityCheck>> {
    let d_label = real.shape().iter().copied().max().unwrap_or(0);
    let r = frak_r(real, ctx)?;
    let mut out = cyclic_law_checks("rot/frakr-law", d_label, real, &r)?;

    let blocks = real.blocks();
    let mut block_of = vec![0usize; real.dim()];
    for (idx, &(off, d)) in blocks.iter().enumerate() {
        for i in off..off + d + 1 {
            block_of[i] = idx;
        }
    }
    let mut offender = None;
    'scan: for i in 0..real.dim() {
        for j in 0..real.dim() {
            if block_of[i] != block_of[j] && !r.entry(i, j).is_zero() {
                offender = Some((i, j));
                break 'scan;
            }
        }
    }
    out.push(IdentityCheck::of_condition(
        "rot/frakr-blocks",
        d_label,
        offender.is_none(),
        match offender {
            Some((i, j)) => format!("entry ({i},{j}) joins two summands: {}", r.entry(i, j)),
            None => String::new(),
        },
    ));

    for (idx, &(off, d)) in blocks.iter().enumerate() {
        let summand = Realization::irreducible(ctx, d, real.basis())?;
        let omega = standard_rotator(&summand, ctx)?;
        let scalar = ctx.q_half_power(-((d as i64) * (d as i64)));
        out.push(IdentityCheck::of_matrices(
            format!("rot/frakr-block-scalar-{idx}"),
            d,
            &r.diagonal_block(off, d + 1),
            &omega.scale(&scalar),
        ));
    }

    if real.shape().len() == 1 {
        let d = real.shape()[0];
        let d_sq = (d as i64) * (d as i64);
        let caps = cap_operators(real, ctx)?;
        let ups = upsilon(real, ctx)?;
        out.push(IdentityCheck::of_matrices(
            "rot/upsilon-vs-y",
            d,
            &caps.y_cap,
            &ups.scale(&ctx.q_half_power(d_sq)),
        ));

        let omega = standard_rotator(real, ctx)?;
        let ratio = &r * &omega.inverse()?;
        let detected = ratio.as_scalar_multiple_of_identity();
        let expected = ctx.q_half_power(-d_sq);
        out.push(IdentityCheck::of_condition(
            "rot/frakr-scalar",
            d,
            detected.as_ref() == Some(&expected),
            format!(
                "expected the scalar {expected}, found {}",
                detected.map_or("a non-scalar".to_string(), |s| s.to_string())
            ),
        ));

        let half = ctx.q_half_power(d_sq);
        let theta_form = match ctx.theta_mode() {
            ThetaMode::SqQ => {
                let sign = if d % 2 == 1 { -Rat::one() } else { Rat::one() };
                sign * ctx.theta_pow(d_sq)
            }
            ThetaMode::SqQInv => ctx.theta_pow(-d_sq),
        };
        out.push(IdentityCheck::of_condition(
            "rot/sqrt-q",
            d,
            half == theta_form,
            format!("q^(d²/2) = {half} but the θ form gives {theta_form}"),
        ));
    }
    Ok(out)
}

/// The three `τ` maps on an irreducible type-1 module.
#[derive(Clone, Debug)]
pub struct TauMaps {
    pub tau_x: Matrix,
    pub tau_y: Matrix,
    pub tau_z: Matrix,
}

/// `τ_x = exp_q(n_y) Ω`, `τ_y = exp_q(n_z) Ω`, `τ_z = exp_q(n_x) Ω`.
pub fn tau_maps(real: &Realization, ctx: &QContext) -> Result<TauMaps> {
    real.single_diameter()?;
    let omega = standard_rotator(real, ctx)?;
    let ex = exp_q(real.matrix(GenSym::Nx)?, ctx)?;
    let ey = exp_q(real.matrix(GenSym::Ny)?, ctx)?;
    let ez = exp_q(real.matrix(GenSym::Nz)?, ctx)?;
    Ok(TauMaps {
        tau_x: &ey * &omega,
        tau_y: &ez * &omega,
        tau_z: &ex * &omega,
    })
}

/// Checks whether `m` maps each weight space `V(λ)` into `V(-λ)`, reporting
/// the first offending entry otherwise.
pub fn weight_flip_check(
    identity: impl Into<String>,
    d: usize,
    real: &Realization,
    m: &Matrix,
) -> IdentityCheck {
    let mut offender = None;
    'scan: for j in 0..real.dim() {
        let Some(lambda) = real.weights().weight_of(j) else { continue };
        for i in 0..real.dim() {
            if m.entry(i, j).is_zero() {
                continue;
            }
            if real.weights().weight_of(i) != Some(-lambda) {
                offender = Some((i, j, lambda));
                break 'scan;
            }
        }
    }
    IdentityCheck::of_condition(
        identity,
        d,
        offender.is_none(),
        match offender {
            Some((i, j, lambda)) => format!(
                "entry ({i},{j}) sends weight {lambda} outside weight {}",
                -lambda
            ),
            None => String::new(),
        },
    )
}

/// The `τ`-map identities on an irreducible module:
///
/// * `tau/alt-*`: `τ_x = Ω exp_q(n_z)`, `τ_y = Ω exp_q(n_x)`, `τ_z = Ω exp_q(n_y)`;
/// * `tau/conj-nx`, `tau/conj-y`, `tau/conj-nz`: the `τ_y` conjugation triple;
/// * `tau/cap-*`: `X = Ω³ τ_x⁻²`, `Y = Ω³ τ_y⁻²`, `Z = Ω³ τ_z⁻²`;
/// * `tau/weight-flip`: `τ_y V(λ) = V(-λ)`.
pub fn tau_checks(real: &Realization, ctx: &QContext) -> Vec<IdentityCheck> {
    let d_label = real.shape().iter().copied().max().unwrap_or(0);
    tau_checks_inner(real, ctx)
        .unwrap_or_else(|e| vec![IdentityCheck::of_error("tau/checks", d_label, &e)])
}

fn tau_checks_inner(real: &Realization, ctx: &QContext) -> Result<Vec<IdentityCheck>> {
    let d = real.single_diameter()?;
    let omega = standard_rotator(real, ctx)?;
    let taus = tau_maps(real, ctx)?;
    let ex = exp_q(real.matrix(GenSym::Nx)?, ctx)?;
    let ey = exp_q(real.matrix(GenSym::Ny)?, ctx)?;
    let ez = exp_q(real.matrix(GenSym::Nz)?, ctx)?;

    let mut out = vec![
        IdentityCheck::of_matrices("tau/alt-x", d, &taus.tau_x, &(&omega * &ez)),
        IdentityCheck::of_matrices("tau/alt-y", d, &taus.tau_y, &(&omega * &ex)),
        IdentityCheck::of_matrices("tau/alt-z", d, &taus.tau_z, &(&omega * &ey)),
    ];

    let tau_y_inv = taus.tau_y.inverse()?;
    let conj = |g: &Matrix| &(&tau_y_inv * g) * &taus.tau_y;
    let nx = real.matrix(GenSym::Nx)?;
    let nz = real.matrix(GenSym::Nz)?;
    let y = real.matrix(GenSym::Y)?;
    let y_inv = real.matrix(GenSym::YInv)?;
    out.push(IdentityCheck::of_matrices(
        "tau/conj-nx",
        d,
        &conj(nx),
        &(&(y_inv * nz) * y_inv),
    ));
    out.push(IdentityCheck::of_matrices("tau/conj-y", d, &conj(y), y_inv));
    out.push(IdentityCheck::of_matrices("tau/conj-nz", d, &conj(nz), nx));

    let caps = cap_operators(real, ctx)?;
    let omega_cubed = omega.pow(3);
    for (name, tau, cap) in [
        ("tau/cap-x", &taus.tau_x, &caps.x_cap),
        ("tau/cap-y", &taus.tau_y, &caps.y_cap),
        ("tau/cap-z", &taus.tau_z, &caps.z_cap),
    ] {
        let tau_inv_sq = tau.inverse()?.pow(2);
        out.push(IdentityCheck::of_matrices(
            name,
            d,
            &(&omega_cubed * &tau_inv_sq),
            cap,
        ));
    }

    out.push(weight_flip_check("tau/weight-flip", d, real, &taus.tau_y));
    Ok(out)
}

/// Every rotator-family check that applies to `real`: the full battery on an
/// irreducible, and the `Υ`/`𝔯` battery on a proper direct sum.
pub fn all_checks(real: &Realization, ctx: &QContext) -> Vec<IdentityCheck> {
    let mut out = Vec::new();
    if real.shape().len() == 1 {
        out.extend(rotator_law_checks(real, ctx));
        out.extend(product_form_checks(real, ctx));
        out.extend(conjugation_checks(real, ctx));
        out.extend(tau_checks(real, ctx));
    }
    out.extend(frak_r_checks(real, ctx));
    out
}
