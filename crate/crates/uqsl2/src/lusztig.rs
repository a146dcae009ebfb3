//! The Lusztig automorphism tables `L`, `L^∨` (and inverses), the Lusztig
//! operators `T`, `T^∨` (and inverses), and exact checks for every identity
//! that ties them to the equitable generators, the `τ` maps, and the
//! uniform rotator `𝔯`.
//!
//! The automorphisms act on the Chevalley generators by
//!
//! ```text
//! L:       e ↦ -f k,     f ↦ -k⁻¹ e,   k ↦ k⁻¹
//! L^∨:     e ↦ -k f,     f ↦ -e k⁻¹,   k ↦ k⁻¹
//! L⁻¹:     e ↦ -k⁻¹ f,   f ↦ -e k,     k ↦ k⁻¹
//! (L^∨)⁻¹: e ↦ -f k⁻¹,   f ↦ -k e,     k ↦ k⁻¹
//! ```
//!
//! On a type-1 module the corresponding operators act on each weight space
//! `V(λ)` by finitely supported triple sums
//!
//! ```text
//! T        = Σ_{b-a-c=λ} e^a f^b e^c / ([a]!q [b]!q [c]!q) · (-1)^b q^{b-ac}
//! T^∨      = Σ_{a-b+c=λ} f^a e^b f^c / ([a]!q [b]!q [c]!q) · (-1)^b q^{b-ac}
//! T⁻¹      = Σ_{a-b+c=λ} f^a e^b f^c / ([a]!q [b]!q [c]!q) · (-1)^b q^{ac-b}
//! (T^∨)⁻¹  = Σ_{b-a-c=λ} e^a f^b e^c / ([a]!q [b]!q [c]!q) · (-1)^b q^{ac-b}
//! ```
//!
//! and they realize the automorphisms by conjugation: `L(ξ) = T ξ T⁻¹` and
//! `L^∨(ξ) = T^∨ ξ (T^∨)⁻¹` for every algebra element `ξ`.  On the
//! irreducible module of diameter `d` (Chevalley basis `v_0, …, v_d`) the
//! four operators have the closed forms
//!
//! ```text
//! T v_i       = (-1)^{d-i} q^{(d-i)(i+1)} v_{d-i}      T^∨ v_i      = (-1)^i q^{i(d-i+1)} v_{d-i}
//! T⁻¹ v_i     = (-1)^i q^{i(i-d-1)} v_{d-i}            (T^∨)⁻¹ v_i  = (-1)^{d-i} q^{(i-d)(i+1)} v_{d-i}
//! ```
//!
//! which this module cross-validates against the triple sums entrywise.
//! The deepest checks are the four-case correspondence `τ_y = scalar · partner`
//! (scalar `(-1)^d θ^{d²}` when `θ² = q`, else `θ^{-d²}`) and the closing
//! theorem `partner = exp_q(n_z) 𝔯`, where the partner operator is `T⁻¹` or
//! `(T^∨)⁻¹` according to the (θ-mode, identification) cell.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::expr::{chevalley_relations, AlgebraExpression, GenSym};
use crate::identification::chevalley_expression_of;
use crate::linalg::Matrix;
use crate::module::{BasisKind, Realization};
use crate::qexp::exp_q;
use crate::report::IdentityCheck;
use crate::rotator::{frak_r, tau_maps, weight_flip_check};
use crate::scalar::{IdentKind, QContext, Rat, ThetaMode};

/// The four Lusztig operators.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LusztigKind {
    T,
    TVee,
    TInv,
    TVeeInv,
}

impl LusztigKind {
    /// Stable name used in reports and operator emission.
    pub fn name(self) -> &'static str {
        match self {
            LusztigKind::T => "T",
            LusztigKind::TVee => "Tvee",
            LusztigKind::TInv => "Tinv",
            LusztigKind::TVeeInv => "TveeInv",
        }
    }
}

/// The four automorphism tables.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AutName {
    L,
    LVee,
    LInv,
    LVeeInv,
}

impl AutName {
    pub fn name(self) -> &'static str {
        match self {
            AutName::L => "L",
            AutName::LVee => "Lvee",
            AutName::LInv => "Linv",
            AutName::LVeeInv => "LveeInv",
        }
    }
}

/// One automorphism given by formal images of the Chevalley generators.
#[derive(Clone, Debug)]
pub struct AutomorphismTable {
    name: AutName,
    images: BTreeMap<GenSym, AlgebraExpression>,
}

impl AutomorphismTable {
    /// The table of `name`, with images on `e`, `f`, `k`, `k⁻¹`.
    pub fn new(name: AutName) -> Self {
        let minus_one = -&Rat::one();
        let (e_image, f_image) = match name {
            AutName::L => (
                AlgebraExpression::term(minus_one.clone(), &[GenSym::F, GenSym::K]),
                AlgebraExpression::term(minus_one.clone(), &[GenSym::KInv, GenSym::E]),
            ),
            AutName::LVee => (
                AlgebraExpression::term(minus_one.clone(), &[GenSym::K, GenSym::F]),
                AlgebraExpression::term(minus_one.clone(), &[GenSym::E, GenSym::KInv]),
            ),
            AutName::LInv => (
                AlgebraExpression::term(minus_one.clone(), &[GenSym::KInv, GenSym::F]),
                AlgebraExpression::term(minus_one.clone(), &[GenSym::E, GenSym::K]),
            ),
            AutName::LVeeInv => (
                AlgebraExpression::term(minus_one.clone(), &[GenSym::F, GenSym::KInv]),
                AlgebraExpression::term(minus_one, &[GenSym::K, GenSym::E]),
            ),
        };
        let mut images = BTreeMap::new();
        images.insert(GenSym::E, e_image);
        images.insert(GenSym::F, f_image);
        images.insert(GenSym::K, AlgebraExpression::symbol(GenSym::KInv));
        images.insert(GenSym::KInv, AlgebraExpression::symbol(GenSym::K));
        AutomorphismTable { name, images }
    }

    pub fn name(&self) -> AutName {
        self.name
    }

    pub fn images(&self) -> &BTreeMap<GenSym, AlgebraExpression> {
        &self.images
    }

    /// Extends the images to the full eight-symbol word alphabet: each
    /// equitable generator is first rewritten in the Chevalley generators
    /// through the identification of `ctx`, then mapped through this table.
    pub fn alphabet_images(&self, ctx: &QContext) -> Result<BTreeMap<GenSym, AlgebraExpression>> {
        let mut out = self.images.clone();
        for sym in [GenSym::X, GenSym::Y, GenSym::YInv, GenSym::Z] {
            let image = chevalley_expression_of(sym, ctx).substitute(&self.images)?;
            out.insert(sym, image);
        }
        Ok(out)
    }
}

/// The triple-sum Lusztig operator of `kind` on a type-1 module.  The sum
/// iterates `a, b, c` below the nilpotency indices of the `e`/`f` matrices;
/// each term contributes only on the weight space its index constraint
/// selects.
pub fn lusztig_operator(real: &Realization, ctx: &QContext, kind: LusztigKind) -> Result<Matrix> {
    let e = real.matrix(GenSym::E)?;
    let f = real.matrix(GenSym::F)?;
    let (outer, mid) = match kind {
        LusztigKind::T | LusztigKind::TVeeInv => (e, f),
        LusztigKind::TVee | LusztigKind::TInv => (f, e),
    };
    let r_outer = outer.nilpotency_index()?;
    let r_mid = mid.nilpotency_index()?;
    let outer_pow = outer.power_table(r_outer - 1);
    let mid_pow = mid.power_table(r_mid - 1);
    let dim = real.dim();
    let mut acc = Matrix::zeros(dim, dim);
    for a in 0..r_outer {
        for b in 0..r_mid {
            let ab = &outer_pow[a] * &mid_pow[b];
            let fact_ab = ctx.q_fact(a) * ctx.q_fact(b);
            for c in 0..r_outer {
                let (a_i, b_i, c_i) = (a as i64, b as i64, c as i64);
                let lambda = match kind {
                    LusztigKind::T | LusztigKind::TVeeInv => b_i - a_i - c_i,
                    LusztigKind::TVee | LusztigKind::TInv => a_i - b_i + c_i,
                };
                let Some(indices) = real.weights().classes().get(&lambda) else {
                    continue;
                };
                let exponent = match kind {
                    LusztigKind::T | LusztigKind::TVee => b_i - a_i * c_i,
                    LusztigKind::TInv | LusztigKind::TVeeInv => a_i * c_i - b_i,
                };
                let sign = if b % 2 == 1 { -Rat::one() } else { Rat::one() };
                let coeff = sign * ctx.q_pow(exponent) / (&fact_ab * &ctx.q_fact(c));
                let term = &ab * &outer_pow[c].restrict_columns(indices);
                acc = &acc + &term.scale(&coeff);
            }
        }
    }
    Ok(acc)
}

/// The closed-form matrices of `(T, T^∨, T⁻¹, (T^∨)⁻¹)` on the irreducible
/// module of diameter `d` in the Chevalley basis: antidiagonal matrices whose
/// column `i` carries the displayed coefficient in row `d - i`.
pub fn closed_form_operators(d: usize, ctx: &QContext) -> (Matrix, Matrix, Matrix, Matrix) {
    let n = d + 1;
    let d_i = d as i64;
    let sign = |m: i64| if m.rem_euclid(2) == 1 { -Rat::one() } else { Rat::one() };
    let mut t = Matrix::zeros(n, n);
    let mut t_vee = Matrix::zeros(n, n);
    let mut t_inv = Matrix::zeros(n, n);
    let mut t_vee_inv = Matrix::zeros(n, n);
    for i in 0..=d_i {
        let row = (d_i - i) as usize;
        let col = i as usize;
        t.set_entry(row, col, sign(d_i - i) * ctx.q_pow((d_i - i) * (i + 1)));
        t_vee.set_entry(row, col, sign(i) * ctx.q_pow(i * (d_i - i + 1)));
        t_inv.set_entry(row, col, sign(i) * ctx.q_pow(i * (i - d_i - 1)));
        t_vee_inv.set_entry(row, col, sign(d_i - i) * ctx.q_pow((i - d_i) * (i + 1)));
    }
    (t, t_vee, t_inv, t_vee_inv)
}

/// The partner inverse operator of the closing theorem (and of the `τ_y`
/// correspondence): `T⁻¹` when (θ² = q, primary) or (θ² = q⁻¹, secondary),
/// `(T^∨)⁻¹` in the two remaining cells.
pub fn partner_inverse_kind(ctx: &QContext) -> LusztigKind {
    match (ctx.theta_mode(), ctx.ident()) {
        (ThetaMode::SqQ, IdentKind::Primary) | (ThetaMode::SqQInv, IdentKind::Secondary) => {
            LusztigKind::TInv
        }
        _ => LusztigKind::TVeeInv,
    }
}

fn shape_label(real: &Realization) -> usize {
    real.shape().iter().copied().max().unwrap_or(0)
}

fn product_of<'a>(
    dim: usize,
    symbols: &[GenSym],
    mut lookup: impl FnMut(GenSym) -> Result<&'a Matrix>,
) -> Result<Matrix> {
    let mut acc = Matrix::identity(dim);
    for &s in symbols {
        acc = &acc * lookup(s)?;
    }
    Ok(acc)
}

/// Operator-level checks on one module:
///
/// * `lusz/oracle-*` (irreducible Chevalley realization only): the triple
///   sums equal the closed forms entrywise;
/// * `lusz/inv-T`, `lusz/inv-Tvee`: two-sided inverse laws;
/// * `lusz/flip-*`: each operator maps `V(λ)` into `V(-λ)`;
/// * `lusz/ttcomp`, `lusz/ttcomp-inv`: on each weight space,
///   `T = (-1)^λ q^λ T^∨` and `T⁻¹ = (-1)^λ q^λ (T^∨)⁻¹`.
pub fn operator_checks(real: &Realization, ctx: &QContext) -> Vec<IdentityCheck> {
    let d_label = shape_label(real);
    operator_checks_inner(real, ctx)
        .unwrap_or_else(|e| vec![IdentityCheck::of_error("lusz/operators", d_label, &e)])
}

fn operator_checks_inner(real: &Realization, ctx: &QContext) -> Result<Vec<IdentityCheck>> {
    let d_label = shape_label(real);
    let dim = real.dim();
    let t = lusztig_operator(real, ctx, LusztigKind::T)?;
    let t_vee = lusztig_operator(real, ctx, LusztigKind::TVee)?;
    let t_inv = lusztig_operator(real, ctx, LusztigKind::TInv)?;
    let t_vee_inv = lusztig_operator(real, ctx, LusztigKind::TVeeInv)?;
    let mut out = Vec::new();

    if real.basis() == BasisKind::Chevalley && real.shape().len() == 1 {
        let d = real.shape()[0];
        let (ot, otv, oti, otvi) = closed_form_operators(d, ctx);
        out.push(IdentityCheck::of_matrices("lusz/oracle-T", d, &t, &ot));
        out.push(IdentityCheck::of_matrices("lusz/oracle-Tvee", d, &t_vee, &otv));
        out.push(IdentityCheck::of_matrices("lusz/oracle-Tinv", d, &t_inv, &oti));
        out.push(IdentityCheck::of_matrices("lusz/oracle-TveeInv", d, &t_vee_inv, &otvi));
    }

    let id = Matrix::identity(dim);
    for (name, op, inv) in [
        ("lusz/inv-T", &t, &t_inv),
        ("lusz/inv-Tvee", &t_vee, &t_vee_inv),
    ] {
        let left = op * inv;
        let check = if left == id {
            IdentityCheck::of_matrices(name, d_label, &(inv * op), &id)
        } else {
            IdentityCheck::of_matrices(name, d_label, &left, &id)
        };
        out.push(check);
    }

    out.push(weight_flip_check("lusz/flip-T", d_label, real, &t));
    out.push(weight_flip_check("lusz/flip-Tvee", d_label, real, &t_vee));
    out.push(weight_flip_check("lusz/flip-Tinv", d_label, real, &t_inv));
    out.push(weight_flip_check("lusz/flip-TveeInv", d_label, real, &t_vee_inv));

    for (name, lhs, rhs) in [
        ("lusz/ttcomp", &t, &t_vee),
        ("lusz/ttcomp-inv", &t_inv, &t_vee_inv),
    ] {
        let mut expected = Matrix::zeros(dim, dim);
        for (lambda, indices) in real.weights().classes() {
            let sign = if lambda.rem_euclid(2) == 1 { -Rat::one() } else { Rat::one() };
            let factor = sign * ctx.q_pow(*lambda);
            expected = &expected + &rhs.restrict_columns(indices).scale(&factor);
        }
        out.push(IdentityCheck::of_matrices(name, d_label, lhs, &expected));
    }
    Ok(out)
}

/// Conjugation realizes the automorphisms: for the pairs `(L, T)` and
/// `(L^∨, T^∨)`, checks `image(ξ) · O = O · ξ` for the generators `e, f, k`
/// and for each supplied word over the eight-symbol alphabet.  Word images
/// are the products of the per-symbol image matrices; for the first few
/// words the full rewrite-substitute-expand route is also evaluated and
/// compared against the product route (`lusz/conj-*-route-*`), so the two
/// computations stay independently exercised.
pub fn conjugation_checks(
    real: &Realization,
    ctx: &QContext,
    words: &[Vec<GenSym>],
) -> Vec<IdentityCheck> {
    let d_label = shape_label(real);
    conjugation_checks_inner(real, ctx, words)
        .unwrap_or_else(|e| vec![IdentityCheck::of_error("lusz/conjugation", d_label, &e)])
}

fn conjugation_checks_inner(
    real: &Realization,
    ctx: &QContext,
    words: &[Vec<GenSym>],
) -> Result<Vec<IdentityCheck>> {
    let d_label = shape_label(real);
    let dim = real.dim();
    let mut out = Vec::new();
    for (table, kind) in [
        (AutomorphismTable::new(AutName::L), LusztigKind::T),
        (AutomorphismTable::new(AutName::LVee), LusztigKind::TVee),
    ] {
        let tname = table.name().name();
        let op = lusztig_operator(real, ctx, kind)?;
        let images = table.alphabet_images(ctx)?;
        let mut image_matrix: BTreeMap<GenSym, Matrix> = BTreeMap::new();
        for (sym, expr) in &images {
            image_matrix.insert(*sym, real.eval(expr)?);
        }

        for g in [GenSym::E, GenSym::F, GenSym::K] {
            out.push(IdentityCheck::of_matrices(
                format!("lusz/conj-{tname}-gen-{}", g.name()),
                d_label,
                &(&image_matrix[&g] * &op),
                &(&op * real.matrix(g)?),
            ));
        }

        for (i, word) in words.iter().take(3).enumerate() {
            let expanded = AlgebraExpression::word(word).substitute(&images)?;
            let direct = real.eval(&expanded)?;
            let via_products = product_of(dim, word, |s| {
                image_matrix
                    .get(&s)
                    .ok_or_else(|| Error::UnknownSymbol(s.name().to_string()))
            })?;
            out.push(IdentityCheck::of_matrices(
                format!("lusz/conj-{tname}-route-{i:02}"),
                d_label,
                &via_products,
                &direct,
            ));
        }

        for (i, word) in words.iter().enumerate() {
            let word_matrix = product_of(dim, word, |s| real.matrix(s))?;
            let image_word = product_of(dim, word, |s| {
                image_matrix
                    .get(&s)
                    .ok_or_else(|| Error::UnknownSymbol(s.name().to_string()))
            })?;
            out.push(IdentityCheck::of_matrices(
                format!("lusz/conj-{tname}-word-{i:02}"),
                d_label,
                &(&image_word * &op),
                &(&op * &word_matrix),
            ));
        }
    }
    Ok(out)
}

/// Structural checks on the four tables themselves, at module level:
///
/// * `lusz/table-*`: the images of `e, f, k, k⁻¹` satisfy the defining
///   relations (each table is a homomorphism);
/// * `lusz/compose-*`: substituting a table into its inverse table returns
///   each generator;
/// * `lusz/cd-*`: the square `L^∨(g) = k · L(g) · k⁻¹` commutes.
pub fn table_checks(real: &Realization, ctx: &QContext) -> Vec<IdentityCheck> {
    let d_label = shape_label(real);
    table_checks_inner(real, ctx)
        .unwrap_or_else(|e| vec![IdentityCheck::of_error("lusz/tables", d_label, &e)])
}

fn table_checks_inner(real: &Realization, ctx: &QContext) -> Result<Vec<IdentityCheck>> {
    let d_label = shape_label(real);
    let dim = real.dim();
    let zero = Matrix::zeros(dim, dim);
    let mut out = Vec::new();

    for name in [AutName::L, AutName::LVee, AutName::LInv, AutName::LVeeInv] {
        let table = AutomorphismTable::new(name);
        for (rel_name, rel) in chevalley_relations(ctx) {
            let image = rel.substitute(table.images())?;
            out.push(IdentityCheck::of_matrices(
                format!("lusz/table-{}-{rel_name}", name.name()),
                d_label,
                &real.eval(&image)?,
                &zero,
            ));
        }
    }

    for (first, second) in [
        (AutName::L, AutName::LInv),
        (AutName::LInv, AutName::L),
        (AutName::LVee, AutName::LVeeInv),
        (AutName::LVeeInv, AutName::LVee),
    ] {
        let t1 = AutomorphismTable::new(first);
        let t2 = AutomorphismTable::new(second);
        for g in [GenSym::E, GenSym::F, GenSym::K, GenSym::KInv] {
            let composed = t1.images()[&g].substitute(t2.images())?;
            out.push(IdentityCheck::of_matrices(
                format!("lusz/compose-{}-{}-{}", first.name(), second.name(), g.name()),
                d_label,
                &real.eval(&composed)?,
                real.matrix(g)?,
            ));
        }
    }

    let l = AutomorphismTable::new(AutName::L);
    let l_vee = AutomorphismTable::new(AutName::LVee);
    let k = real.matrix(GenSym::K)?;
    let k_inv = real.matrix(GenSym::KInv)?;
    for g in [GenSym::E, GenSym::F, GenSym::K, GenSym::KInv] {
        let left = real.eval(&l_vee.images()[&g])?;
        let right = &(k * &real.eval(&l.images()[&g])?) * k_inv;
        out.push(IdentityCheck::of_matrices(
            format!("lusz/cd-{}", g.name()),
            d_label,
            &left,
            &right,
        ));
    }
    Ok(out)
}

/// The equitable description of the Lusztig conjugation action, in both of
/// its cases, plus the literal scalar-free specialization selected by the
/// θ-mode.  With `O` the operator paired to the active identification
/// (case 1 pairs `T` with primary and `T^∨` with secondary; case 2 swaps
/// them), the checked identities are
///
/// ```text
/// O n_x O⁻¹ = s₁ · y⁻¹ n_z y⁻¹      O⁻¹ n_x O = s₁ · n_z
/// O y   O⁻¹ = y⁻¹                   O⁻¹ y   O = y⁻¹
/// O n_z O⁻¹ = s₂ · n_x              O⁻¹ n_z O = s₂ · y⁻¹ n_x y⁻¹
/// ```
///
/// with `(s₁, s₂) = (θ²q⁻¹, θ⁻²q)` in case 1 and `(θ²q, θ⁻²q⁻¹)` in case 2.
/// When `θ² = q` the case-1 scalars are literally 1 and the collapsed
/// identities are re-checked verbatim (`lusz/goodtheta-*`); when `θ² = q⁻¹`
/// the same happens for case 2.
pub fn equitable_lusztig_checks(real: &Realization, ctx: &QContext) -> Vec<IdentityCheck> {
    let d_label = shape_label(real);
    equitable_lusztig_checks_inner(real, ctx)
        .unwrap_or_else(|e| vec![IdentityCheck::of_error("lusz/equitable", d_label, &e)])
}

fn equitable_lusztig_checks_inner(
    real: &Realization,
    ctx: &QContext,
) -> Result<Vec<IdentityCheck>> {
    let d_label = shape_label(real);
    let nx = real.matrix(GenSym::Nx)?;
    let nz = real.matrix(GenSym::Nz)?;
    let y = real.matrix(GenSym::Y)?;
    let y_inv = real.matrix(GenSym::YInv)?;
    let sandwich_nz = &(y_inv * nz) * y_inv;
    let sandwich_nx = &(y_inv * nx) * y_inv;

    let case_one_kind = match ctx.ident() {
        IdentKind::Primary => LusztigKind::T,
        IdentKind::Secondary => LusztigKind::TVee,
    };
    let case_two_kind = match ctx.ident() {
        IdentKind::Primary => LusztigKind::TVee,
        IdentKind::Secondary => LusztigKind::T,
    };

    let mut out = Vec::new();
    for (case, kind, s1, s2) in [
        (
            1,
            case_one_kind,
            ctx.theta_pow(2) * ctx.q_pow(-1),
            ctx.theta_pow(-2) * ctx.q_pow(1),
        ),
        (
            2,
            case_two_kind,
            ctx.theta_pow(2) * ctx.q_pow(1),
            ctx.theta_pow(-2) * ctx.q_pow(-1),
        ),
    ] {
        let op = lusztig_operator(real, ctx, kind)?;
        let op_inv = op.inverse()?;
        let fwd = |g: &Matrix| &(&op * g) * &op_inv;
        let bwd = |g: &Matrix| &(&op_inv * g) * &op;
        out.push(IdentityCheck::of_matrices(
            format!("lusz/equit{case}-nx"),
            d_label,
            &fwd(nx),
            &sandwich_nz.scale(&s1),
        ));
        out.push(IdentityCheck::of_matrices(
            format!("lusz/equit{case}-y"),
            d_label,
            &fwd(y),
            y_inv,
        ));
        out.push(IdentityCheck::of_matrices(
            format!("lusz/equit{case}-nz"),
            d_label,
            &fwd(nz),
            &nx.scale(&s2),
        ));
        out.push(IdentityCheck::of_matrices(
            format!("lusz/equit{case}-inv-nx"),
            d_label,
            &bwd(nx),
            &nz.scale(&s1),
        ));
        out.push(IdentityCheck::of_matrices(
            format!("lusz/equit{case}-inv-y"),
            d_label,
            &bwd(y),
            y_inv,
        ));
        out.push(IdentityCheck::of_matrices(
            format!("lusz/equit{case}-inv-nz"),
            d_label,
            &bwd(nz),
            &sandwich_nx.scale(&s2),
        ));

        let collapsed = match ctx.theta_mode() {
            ThetaMode::SqQ => case == 1,
            ThetaMode::SqQInv => case == 2,
        };
        if collapsed {
            out.push(IdentityCheck::of_matrices(
                "lusz/goodtheta-nx",
                d_label,
                &fwd(nx),
                &sandwich_nz,
            ));
            out.push(IdentityCheck::of_matrices(
                "lusz/goodtheta-y",
                d_label,
                &fwd(y),
                y_inv,
            ));
            out.push(IdentityCheck::of_matrices(
                "lusz/goodtheta-nz",
                d_label,
                &fwd(nz),
                nx,
            ));
            out.push(IdentityCheck::of_matrices(
                "lusz/goodtheta-inv-nx",
                d_label,
                &bwd(nx),
                nz,
            ));
            out.push(IdentityCheck::of_matrices(
                "lusz/goodtheta-inv-y",
                d_label,
                &bwd(y),
                y_inv,
            ));
            out.push(IdentityCheck::of_matrices(
                "lusz/goodtheta-inv-nz",
                d_label,
                &bwd(nz),
                &sandwich_nx,
            ));
        }
    }
    Ok(out)
}

/// The four-case `τ_y` correspondence on an irreducible module:
///
/// ```text
/// θ² = q,   primary:    τ_y = (-1)^d θ^{d²} · T⁻¹
/// θ² = q,   secondary:  τ_y = (-1)^d θ^{d²} · (T^∨)⁻¹
/// θ² = q⁻¹, primary:    τ_y = θ^{-d²} · (T^∨)⁻¹
/// θ² = q⁻¹, secondary:  τ_y = θ^{-d²} · T⁻¹
/// ```
pub fn tau_lu_checks(real: &Realization, ctx: &QContext) -> Vec<IdentityCheck> {
    let d_label = shape_label(real);
    tau_lu_checks_inner(real, ctx)
        .unwrap_or_else(|e| vec![IdentityCheck::of_error("lusz/tau-lu", d_label, &e)])
}

fn tau_lu_checks_inner(real: &Realization, ctx: &QContext) -> Result<Vec<IdentityCheck>> {
    let d = real.single_diameter()?;
    let d_sq = (d as i64) * (d as i64);
    let scalar = match ctx.theta_mode() {
        ThetaMode::SqQ => {
            let sign = if d % 2 == 1 { -Rat::one() } else { Rat::one() };
            sign * ctx.theta_pow(d_sq)
        }
        ThetaMode::SqQInv => ctx.theta_pow(-d_sq),
    };
    let kind = partner_inverse_kind(ctx);
    let partner = lusztig_operator(real, ctx, kind)?;
    let tau_y = tau_maps(real, ctx)?.tau_y;
    Ok(vec![IdentityCheck::of_matrices(
        "lusz/tau-lu",
        d,
        &tau_y,
        &partner.scale(&scalar),
    )])
}

/// The closing theorem on an arbitrary type-1 module: the partner inverse
/// operator of the active (θ-mode, identification) cell equals
/// `exp_q(n_z) · 𝔯` entrywise.
pub fn main_theorem_checks(real: &Realization, ctx: &QContext) -> Vec<IdentityCheck> {
    let d_label = shape_label(real);
    main_theorem_checks_inner(real, ctx)
        .unwrap_or_else(|e| vec![IdentityCheck::of_error("lusz/main-theorem", d_label, &e)])
}

fn main_theorem_checks_inner(real: &Realization, ctx: &QContext) -> Result<Vec<IdentityCheck>> {
    let d_label = shape_label(real);
    let kind = partner_inverse_kind(ctx);
    let partner = lusztig_operator(real, ctx, kind)?;
    let ez = exp_q(real.matrix(GenSym::Nz)?, ctx)?;
    let rhs = &ez * &frak_r(real, ctx)?;
    Ok(vec![IdentityCheck::of_matrices(
        "lusz/main-theorem",
        d_label,
        &partner,
        &rhs,
    )])
}

/// Deterministic pseudo-random words over the eight-symbol alphabet:
/// `count` words of length 1–6 drawn from a seeded stream.
pub fn random_words(seed: u64, count: usize) -> Vec<Vec<GenSym>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=6usize);
            (0..len)
                .map(|_| GenSym::WORD_ALPHABET[rng.gen_range(0..GenSym::WORD_ALPHABET.len())])
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx_cell(theta_mode: ThetaMode, ident: IdentKind, t: i64) -> QContext {
        let theta = match theta_mode {
            ThetaMode::SqQ => Rat::int(-2),
            ThetaMode::SqQInv => Rat::frac(1, 2),
        };
        QContext::new(Rat::int(4), theta, theta_mode, t, ident).unwrap()
    }

    fn ctx_q4() -> QContext {
        ctx_cell(ThetaMode::SqQ, IdentKind::Primary, 0)
    }

    #[test]
    fn closed_form_matches_the_displayed_values_for_diameter_one() {
        let ctx = ctx_q4();
        let (t, t_vee, t_inv, t_vee_inv) = closed_form_operators(1, &ctx);
        assert_eq!(*t.entry(1, 0), Rat::int(-4));
        assert_eq!(*t.entry(0, 1), Rat::int(1));
        assert_eq!(*t_vee.entry(1, 0), Rat::int(1));
        assert_eq!(*t_vee.entry(0, 1), Rat::int(-4));
        assert_eq!(*t_inv.entry(1, 0), Rat::int(1));
        assert_eq!(*t_inv.entry(0, 1), Rat::frac(-1, 4));
        assert_eq!(*t_vee_inv.entry(1, 0), Rat::frac(-1, 4));
        assert_eq!(*t_vee_inv.entry(0, 1), Rat::int(1));
    }

    #[test]
    fn triple_sum_reproduces_the_closed_form_on_small_chevalley_modules() {
        for ident in [IdentKind::Primary, IdentKind::Secondary] {
            let ctx = ctx_cell(ThetaMode::SqQ, ident, 0);
            for d in 0..=3 {
                let real = Realization::irreducible(&ctx, d, BasisKind::Chevalley).unwrap();
                let (ot, otv, oti, otvi) = closed_form_operators(d, &ctx);
                assert_eq!(lusztig_operator(&real, &ctx, LusztigKind::T).unwrap(), ot);
                assert_eq!(lusztig_operator(&real, &ctx, LusztigKind::TVee).unwrap(), otv);
                assert_eq!(lusztig_operator(&real, &ctx, LusztigKind::TInv).unwrap(), oti);
                assert_eq!(
                    lusztig_operator(&real, &ctx, LusztigKind::TVeeInv).unwrap(),
                    otvi
                );
            }
        }
    }

    #[test]
    fn diameter_two_operator_is_the_frozen_matrix() {
        let ctx = ctx_q4();
        let real = Realization::irreducible(&ctx, 2, BasisKind::Chevalley).unwrap();
        let t = lusztig_operator(&real, &ctx, LusztigKind::T).unwrap();
        let expected = Matrix::new(
            3,
            3,
            vec![
                Rat::int(0),
                Rat::int(0),
                Rat::int(1),
                Rat::int(0),
                Rat::int(-16),
                Rat::int(0),
                Rat::int(16),
                Rat::int(0),
                Rat::int(0),
            ],
        )
        .unwrap();
        assert_eq!(t, expected);
    }

    #[test]
    fn equitable_basis_operator_matches_the_hand_computation() {
        let ctx = ctx_q4();
        let real = Realization::irreducible(&ctx, 1, BasisKind::Equitable).unwrap();
        let t = lusztig_operator(&real, &ctx, LusztigKind::T).unwrap();
        let expected = Matrix::new(
            2,
            2,
            vec![Rat::int(0), Rat::int(2), Rat::int(-2), Rat::int(0)],
        )
        .unwrap();
        assert_eq!(t, expected);
    }

    #[test]
    fn operator_checks_pass_on_direct_sums_in_both_bases() {
        let ctx = ctx_q4();
        for basis in [BasisKind::Chevalley, BasisKind::Equitable] {
            let real = Realization::new(&ctx, &[1, 3], basis).unwrap();
            for check in operator_checks(&real, &ctx) {
                assert!(
                    check.pass,
                    "{} failed: {:?}",
                    check.identity, check.counterexample
                );
            }
        }
    }

    #[test]
    fn conjugation_checks_pass_with_random_words() {
        let ctx = ctx_q4();
        let words = random_words(42, 10);
        let real = Realization::new(&ctx, &[1, 2], BasisKind::Chevalley).unwrap();
        let checks = conjugation_checks(&real, &ctx, &words);
        assert!(checks.iter().filter(|c| c.identity.contains("route")).count() == 6);
        for check in checks {
            assert!(
                check.pass,
                "{} failed: {:?}",
                check.identity, check.counterexample
            );
        }
    }

    #[test]
    fn table_checks_pass_and_cover_all_four_tables() {
        let ctx = ctx_cell(ThetaMode::SqQInv, IdentKind::Secondary, 1);
        let real = Realization::irreducible(&ctx, 2, BasisKind::Chevalley).unwrap();
        let checks = table_checks(&real, &ctx);
        let relation_checks = checks
            .iter()
            .filter(|c| c.identity.starts_with("lusz/table-"))
            .count();
        assert_eq!(relation_checks, 20);
        for check in checks {
            assert!(
                check.pass,
                "{} failed: {:?}",
                check.identity, check.counterexample
            );
        }
    }

    #[test]
    fn equitable_lusztig_checks_pass_in_all_four_cells() {
        for theta_mode in [ThetaMode::SqQ, ThetaMode::SqQInv] {
            for ident in [IdentKind::Primary, IdentKind::Secondary] {
                let ctx = ctx_cell(theta_mode, ident, 0);
                for d in 0..=2 {
                    let real = Realization::irreducible(&ctx, d, BasisKind::Equitable).unwrap();
                    let checks = equitable_lusztig_checks(&real, &ctx);
                    assert!(checks.iter().any(|c| c.identity.starts_with("lusz/goodtheta")));
                    for check in checks {
                        assert!(
                            check.pass,
                            "{} failed at d = {d}, {theta_mode:?}, {ident:?}: {:?}",
                            check.identity, check.counterexample
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn tau_y_is_twice_the_partner_inverse_on_the_frozen_cell() {
        let ctx = ctx_q4();
        let real = Realization::irreducible(&ctx, 1, BasisKind::Equitable).unwrap();
        let t_inv = lusztig_operator(&real, &ctx, LusztigKind::TInv).unwrap();
        let tau_y = tau_maps(&real, &ctx).unwrap().tau_y;
        assert_eq!(tau_y, t_inv.scale(&Rat::int(2)));
        for check in tau_lu_checks(&real, &ctx) {
            assert!(check.pass, "{} failed", check.identity);
        }
    }

    #[test]
    fn tau_y_scalar_is_sixteen_on_the_inverse_mode_cell() {
        let ctx = ctx_cell(ThetaMode::SqQInv, IdentKind::Secondary, 0);
        let real = Realization::irreducible(&ctx, 2, BasisKind::Equitable).unwrap();
        assert_eq!(partner_inverse_kind(&ctx), LusztigKind::TInv);
        let t_inv = lusztig_operator(&real, &ctx, LusztigKind::TInv).unwrap();
        let tau_y = tau_maps(&real, &ctx).unwrap().tau_y;
        assert_eq!(tau_y, t_inv.scale(&Rat::int(16)));
    }

    #[test]
    fn tau_lu_holds_in_all_four_cells_for_small_diameters() {
        for theta_mode in [ThetaMode::SqQ, ThetaMode::SqQInv] {
            for ident in [IdentKind::Primary, IdentKind::Secondary] {
                let ctx = ctx_cell(theta_mode, ident, -1);
                for d in 0..=3 {
                    for basis in [BasisKind::Chevalley, BasisKind::Equitable] {
                        let real = Realization::irreducible(&ctx, d, basis).unwrap();
                        for check in tau_lu_checks(&real, &ctx) {
                            assert!(
                                check.pass,
                                "{} failed at d = {d}, {theta_mode:?}, {ident:?}: {:?}",
                                check.identity, check.counterexample
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn main_theorem_holds_on_irreducibles_and_direct_sums() {
        for theta_mode in [ThetaMode::SqQ, ThetaMode::SqQInv] {
            for ident in [IdentKind::Primary, IdentKind::Secondary] {
                let ctx = ctx_cell(theta_mode, ident, 1);
                for shape in [vec![2], vec![1, 3, 0]] {
                    for basis in [BasisKind::Chevalley, BasisKind::Equitable] {
                        let real = Realization::new(&ctx, &shape, basis).unwrap();
                        for check in main_theorem_checks(&real, &ctx) {
                            assert!(
                                check.pass,
                                "{} failed on {shape:?}, {theta_mode:?}, {ident:?}: {:?}",
                                check.identity, check.counterexample
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn random_words_are_deterministic_and_length_bounded() {
        let a = random_words(42, 100);
        let b = random_words(42, 100);
        assert_eq!(a, b);
        assert_eq!(a.len(), 100);
        assert!(a.iter().all(|w| (1..=6).contains(&w.len())));
        let c = random_words(43, 100);
        assert_ne!(a, c);
    }

    #[test]
    fn perturbed_module_fails_the_main_theorem() {
        let ctx = ctx_q4();
        let mut real = Realization::irreducible(&ctx, 2, BasisKind::Equitable).unwrap();
        real.perturb_generator(GenSym::Nz, 0, 1, Rat::one());
        let checks = main_theorem_checks(&real, &ctx);
        assert!(checks.iter().any(|c| !c.pass));
    }
}
