//! The two identifications between the Chevalley and equitable presentations.
//!
//! For each integer t and square-root datum theta there are two algebra
//! isomorphisms ("primary" and "secondary") carrying one presentation to the
//! other. With `c = (q - q⁻¹)`:
//!
//! **Primary** (so `y = k`):
//!
//! ```text
//! x = k⁻¹ - k^{-1-t} e · q^{1+t} c θ⁻¹        e = y^t (1 - yx) · q^{-1-t} c⁻¹ θ
//! y^{±1} = k^{±1}                             f = (z - y⁻¹) y^{-t} · q^t c⁻¹ θ⁻¹
//! z = k⁻¹ + f k^t · q^{-t} c θ                k^{±1} = y^{±1}
//! ```
//!
//! **Secondary** (so `y = k⁻¹`):
//!
//! ```text
//! x = k - k^{1+t} f · q^{1+t} c θ⁻¹           e = (z - y⁻¹) y^{-t} · q^t c⁻¹ θ⁻¹
//! y^{±1} = k^{∓1}                             f = y^t (1 - yx) · q^{-1-t} c⁻¹ θ
//! z = k + e k^{-t} · q^{-t} c θ               k^{±1} = y^{∓1}
//! ```
//!
//! Both directions are provided twice over: as formal
//! [`AlgebraExpression`]s (used to rewrite words before applying an
//! automorphism table) and as matrix-level maps that evaluate those
//! expressions on a module and verify the defining relations of the target
//! presentation ([`Error::RelationFailure`] on violation — that signals a
//! bug, not a data condition).
//!
//! The identification also links the n-elements to e and f; see
//! [`cross_identities`].

use crate::error::{Error, Result};
use crate::expr::{
    chevalley_relations, equitable_relations, k_power, y_power, AlgebraExpression, GenSym,
    SymbolTable,
};
use crate::linalg::Matrix;
use crate::report::IdentityCheck;
use crate::scalar::{IdentKind, QContext};

/// Matrices realizing the Chevalley generators.
#[derive(Clone, Debug)]
pub struct ChevalleyGens {
    pub e: Matrix,
    pub f: Matrix,
    pub k: Matrix,
    pub k_inv: Matrix,
}

/// Matrices realizing the equitable generators.
#[derive(Clone, Debug)]
pub struct EquitableGens {
    pub x: Matrix,
    pub y: Matrix,
    pub y_inv: Matrix,
    pub z: Matrix,
}

/// The formal image of an equitable symbol (x, y, y⁻¹, z) as an expression
/// in Chevalley generators under the active identification of `ctx`.
/// Chevalley symbols are returned unchanged, so this rewrites the whole
/// eight-letter word alphabet into the Chevalley presentation.
pub fn chevalley_expression_of(sym: GenSym, ctx: &QContext) -> AlgebraExpression {
    use GenSym::*;
    let t = ctx.t();
    let c = ctx.q_minus_q_inv();
    match (ctx.ident(), sym) {
        (_, E) | (_, F) | (_, K) | (_, KInv) | (_, One) => AlgebraExpression::symbol(sym),
        (IdentKind::Primary, X) => {
            let coeff = -&(&(&ctx.q_pow(1 + t) * &c) * &ctx.theta_pow(-1));
            let mut w = k_power(-1 - t);
            w.push(E);
            &AlgebraExpression::symbol(KInv) + &AlgebraExpression::term(coeff, &w)
        }
        (IdentKind::Primary, Y) => AlgebraExpression::symbol(K),
        (IdentKind::Primary, YInv) => AlgebraExpression::symbol(KInv),
        (IdentKind::Primary, Z) => {
            let coeff = &(&ctx.q_pow(-t) * &c) * &ctx.theta_pow(1);
            let mut w = vec![F];
            w.extend(k_power(t));
            &AlgebraExpression::symbol(KInv) + &AlgebraExpression::term(coeff, &w)
        }
        (IdentKind::Secondary, X) => {
            let coeff = -&(&(&ctx.q_pow(1 + t) * &c) * &ctx.theta_pow(-1));
            let mut w = k_power(1 + t);
            w.push(F);
            &AlgebraExpression::symbol(K) + &AlgebraExpression::term(coeff, &w)
        }
        (IdentKind::Secondary, Y) => AlgebraExpression::symbol(KInv),
        (IdentKind::Secondary, YInv) => AlgebraExpression::symbol(K),
        (IdentKind::Secondary, Z) => {
            let coeff = &(&ctx.q_pow(-t) * &c) * &ctx.theta_pow(1);
            let mut w = vec![E];
            w.extend(k_power(-t));
            &AlgebraExpression::symbol(K) + &AlgebraExpression::term(coeff, &w)
        }
        (_, other) => panic!(
            "no Chevalley rewriting defined for derived symbol `{}`",
            other.name()
        ),
    }
}

/// The formal image of a Chevalley symbol (e, f, k, k⁻¹) as an expression in
/// equitable generators under the active identification; equitable symbols
/// pass through unchanged.
pub fn equitable_expression_of(sym: GenSym, ctx: &QContext) -> AlgebraExpression {
    use GenSym::*;
    let t = ctx.t();
    let c_inv = ctx.q_minus_q_inv().inv();

    // y^t (1 - yx) · q^{-1-t} c⁻¹ θ — the primary e and the secondary f.
    let from_one_minus_yx = |ctx: &QContext| {
        let coeff = &(&ctx.q_pow(-1 - t) * &c_inv) * &ctx.theta_pow(1);
        let mut w2 = y_power(t + 1);
        w2.push(X);
        &AlgebraExpression::term(coeff.clone(), &y_power(t))
            - &AlgebraExpression::term(coeff, &w2)
    };
    // (z - y⁻¹) y^{-t} · q^t c⁻¹ θ⁻¹ — the primary f and the secondary e.
    let from_z_minus_yinv = |ctx: &QContext| {
        let coeff = &(&ctx.q_pow(t) * &c_inv) * &ctx.theta_pow(-1);
        let mut w1 = vec![Z];
        w1.extend(y_power(-t));
        &AlgebraExpression::term(coeff.clone(), &w1)
            - &AlgebraExpression::term(coeff, &y_power(-1 - t))
    };

    match (ctx.ident(), sym) {
        (_, X) | (_, Y) | (_, YInv) | (_, Z) | (_, One) => AlgebraExpression::symbol(sym),
        (IdentKind::Primary, E) => from_one_minus_yx(ctx),
        (IdentKind::Primary, F) => from_z_minus_yinv(ctx),
        (IdentKind::Primary, K) => AlgebraExpression::symbol(Y),
        (IdentKind::Primary, KInv) => AlgebraExpression::symbol(YInv),
        (IdentKind::Secondary, E) => from_z_minus_yinv(ctx),
        (IdentKind::Secondary, F) => from_one_minus_yx(ctx),
        (IdentKind::Secondary, K) => AlgebraExpression::symbol(YInv),
        (IdentKind::Secondary, KInv) => AlgebraExpression::symbol(Y),
        (_, other) => panic!(
            "no equitable rewriting defined for derived symbol `{}`",
            other.name()
        ),
    }
}

/// Transports Chevalley generator matrices to equitable ones along the
/// active identification, then verifies the equitable relations on the
/// result.
pub fn equitable_from_chevalley(ch: &ChevalleyGens, ctx: &QContext) -> Result<EquitableGens> {
    let dim = ch.k.rows();
    let mut table = SymbolTable::new();
    table.insert(GenSym::E, ch.e.clone());
    table.insert(GenSym::F, ch.f.clone());
    table.insert(GenSym::K, ch.k.clone());
    table.insert(GenSym::KInv, ch.k_inv.clone());
    let eval = |sym: GenSym| chevalley_expression_of(sym, ctx).eval(&table, dim);
    let out = EquitableGens {
        x: eval(GenSym::X)?,
        y: eval(GenSym::Y)?,
        y_inv: eval(GenSym::YInv)?,
        z: eval(GenSym::Z)?,
    };
    let mut check = SymbolTable::new();
    check.insert(GenSym::X, out.x.clone());
    check.insert(GenSym::Y, out.y.clone());
    check.insert(GenSym::YInv, out.y_inv.clone());
    check.insert(GenSym::Z, out.z.clone());
    for (name, rel) in equitable_relations(ctx) {
        if !rel.eval(&check, dim)?.is_zero() {
            return Err(Error::RelationFailure(name.to_string()));
        }
    }
    Ok(out)
}

/// Transports equitable generator matrices to Chevalley ones along the
/// active identification, then verifies the Chevalley relations on the
/// result.
pub fn chevalley_from_equitable(eq: &EquitableGens, ctx: &QContext) -> Result<ChevalleyGens> {
    let dim = eq.y.rows();
    let mut table = SymbolTable::new();
    table.insert(GenSym::X, eq.x.clone());
    table.insert(GenSym::Y, eq.y.clone());
    table.insert(GenSym::YInv, eq.y_inv.clone());
    table.insert(GenSym::Z, eq.z.clone());
    let eval = |sym: GenSym| equitable_expression_of(sym, ctx).eval(&table, dim);
    let out = ChevalleyGens {
        e: eval(GenSym::E)?,
        f: eval(GenSym::F)?,
        k: eval(GenSym::K)?,
        k_inv: eval(GenSym::KInv)?,
    };
    let mut check = SymbolTable::new();
    check.insert(GenSym::E, out.e.clone());
    check.insert(GenSym::F, out.f.clone());
    check.insert(GenSym::K, out.k.clone());
    check.insert(GenSym::KInv, out.k_inv.clone());
    for (name, rel) in chevalley_relations(ctx) {
        if !rel.eval(&check, dim)?.is_zero() {
            return Err(Error::RelationFailure(name.to_string()));
        }
    }
    Ok(out)
}

/// The four cross-identities linking e, f to the nilpotent elements under
/// the active identification (evaluated on a full symbol table):
///
/// primary:
/// ```text
/// e = θ q^{-t} yᵗ nz         nz = θ⁻¹ qᵗ k^{-t} e
/// f = -θ⁻¹ q^{1+t} nx y^{-1-t}    nx = -θ q^{-1-t} f k^{1+t}
/// ```
/// secondary:
/// ```text
/// f = θ q^{-t} yᵗ nz         nz = θ⁻¹ qᵗ kᵗ f
/// e = -θ⁻¹ q^{1+t} nx y^{-1-t}    nx = -θ q^{-1-t} e k^{-1-t}
/// ```
pub fn cross_identities(table: &SymbolTable, d: usize, dim: usize, ctx: &QContext) -> Vec<IdentityCheck> {
    use GenSym::*;
    let t = ctx.t();
    let mut out = Vec::with_capacity(4);
    let mut check = |name: &str, lhs: AlgebraExpression, rhs: AlgebraExpression| {
        let result = (|| -> Result<IdentityCheck> {
            let l = lhs.eval(table, dim)?;
            let r = rhs.eval(table, dim)?;
            Ok(IdentityCheck::of_matrices(name, d, &l, &r))
        })();
        out.push(result.unwrap_or_else(|e| IdentityCheck::of_error(name, d, e)));
    };

    // θ q^{-t} yᵗ nz
    let ytnz = {
        let mut w = y_power(t);
        w.push(Nz);
        AlgebraExpression::term(&ctx.theta_pow(1) * &ctx.q_pow(-t), &w)
    };
    // -θ⁻¹ q^{1+t} nx y^{-1-t}
    let nxyt = {
        let mut w = vec![Nx];
        w.extend(y_power(-1 - t));
        AlgebraExpression::term(-&(&ctx.theta_pow(-1) * &ctx.q_pow(1 + t)), &w)
    };

    match ctx.ident() {
        IdentKind::Primary => {
            check("cross/e-is-yt-nz", AlgebraExpression::symbol(E), ytnz);
            check("cross/f-is-nx-yinv", AlgebraExpression::symbol(F), nxyt);
            // nz = θ⁻¹ qᵗ k^{-t} e
            let mut w = k_power(-t);
            w.push(E);
            check(
                "cross/nz-is-kinvt-e",
                AlgebraExpression::symbol(Nz),
                AlgebraExpression::term(&ctx.theta_pow(-1) * &ctx.q_pow(t), &w),
            );
            // nx = -θ q^{-1-t} f k^{1+t}
            let mut w = vec![F];
            w.extend(k_power(1 + t));
            check(
                "cross/nx-is-f-kt",
                AlgebraExpression::symbol(Nx),
                AlgebraExpression::term(-&(&ctx.theta_pow(1) * &ctx.q_pow(-1 - t)), &w),
            );
        }
        IdentKind::Secondary => {
            check("cross/f-is-yt-nz", AlgebraExpression::symbol(F), ytnz);
            check("cross/e-is-nx-yinv", AlgebraExpression::symbol(E), nxyt);
            // nz = θ⁻¹ qᵗ kᵗ f
            let mut w = k_power(t);
            w.push(F);
            check(
                "cross/nz-is-kt-f",
                AlgebraExpression::symbol(Nz),
                AlgebraExpression::term(&ctx.theta_pow(-1) * &ctx.q_pow(t), &w),
            );
            // nx = -θ q^{-1-t} e k^{-1-t}
            let mut w = vec![E];
            w.extend(k_power(-1 - t));
            check(
                "cross/nx-is-e-kinvt",
                AlgebraExpression::symbol(Nx),
                AlgebraExpression::term(-&(&ctx.theta_pow(1) * &ctx.q_pow(-1 - t)), &w),
            );
        }
    }
    out
}

/// Convenience: the Chevalley tuple of a table.
pub fn chevalley_gens_of(table: &SymbolTable) -> Result<ChevalleyGens> {
    let get = |s: GenSym| -> Result<Matrix> {
        table.get(&s).cloned().ok_or_else(|| Error::UnknownSymbol(s.name().to_string()))
    };
    Ok(ChevalleyGens { e: get(GenSym::E)?, f: get(GenSym::F)?, k: get(GenSym::K)?, k_inv: get(GenSym::KInv)? })
}

/// Convenience: the equitable tuple of a table.
pub fn equitable_gens_of(table: &SymbolTable) -> Result<EquitableGens> {
    let get = |s: GenSym| -> Result<Matrix> {
        table.get(&s).cloned().ok_or_else(|| Error::UnknownSymbol(s.name().to_string()))
    };
    Ok(EquitableGens { x: get(GenSym::X)?, y: get(GenSym::Y)?, y_inv: get(GenSym::YInv)?, z: get(GenSym::Z)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{BasisKind, IrreducibleModule, Realization};
    use crate::scalar::{Rat, ThetaMode};

    fn ctx(t: i64, ident: IdentKind) -> QContext {
        QContext::new(Rat::int(4), Rat::int(-2), ThetaMode::SqQ, t, ident).unwrap()
    }

    #[test]
    fn inverse_map_on_the_two_dimensional_equitable_module() {
        // Hand-checked: q = 4, θ = -2, t = 0, primary, on the equitable basis
        // of diameter 1: e = [[0, 2], [0, 0]], f = [[0, 0], [1/2, 0]], k = y.
        let ctx = ctx(0, IdentKind::Primary);
        let m = IrreducibleModule::equitable(1, 1, &ctx);
        let eq = equitable_gens_of(m.table()).unwrap();
        let ch = chevalley_from_equitable(&eq, &ctx).unwrap();
        assert_eq!(
            ch.e,
            Matrix::new(2, 2, vec![Rat::zero(), Rat::int(2), Rat::zero(), Rat::zero()]).unwrap()
        );
        assert_eq!(
            ch.f,
            Matrix::new(2, 2, vec![Rat::zero(), Rat::zero(), Rat::frac(1, 2), Rat::zero()])
                .unwrap()
        );
        assert_eq!(ch.k, eq.y);
        assert_eq!(ch.k_inv, eq.y_inv);
    }

    #[test]
    fn secondary_sends_y_to_k_inverse() {
        let ctx = ctx(1, IdentKind::Secondary);
        let m = IrreducibleModule::chevalley(2, 1, &ctx);
        let ch = chevalley_gens_of(m.table()).unwrap();
        let eq = equitable_from_chevalley(&ch, &ctx).unwrap();
        assert_eq!(eq.y, ch.k_inv);
        assert_eq!(eq.y_inv, ch.k);
    }

    #[test]
    fn round_trips_are_exact_in_both_directions() {
        for t in [-2, -1, 0, 1, 2] {
            for ident in [IdentKind::Primary, IdentKind::Secondary] {
                let ctx = ctx(t, ident);
                for d in 0..=3 {
                    for eps in [1, -1] {
                        let m = IrreducibleModule::chevalley(d, eps, &ctx);
                        let ch = chevalley_gens_of(m.table()).unwrap();
                        let eq = equitable_from_chevalley(&ch, &ctx).unwrap();
                        let back = chevalley_from_equitable(&eq, &ctx).unwrap();
                        assert_eq!(back.e, ch.e, "e round trip d={d} t={t}");
                        assert_eq!(back.f, ch.f, "f round trip d={d} t={t}");
                        assert_eq!(back.k, ch.k, "k round trip d={d} t={t}");

                        let m = IrreducibleModule::equitable(d, eps, &ctx);
                        let eq = equitable_gens_of(m.table()).unwrap();
                        let ch2 = chevalley_from_equitable(&eq, &ctx).unwrap();
                        let back = equitable_from_chevalley(&ch2, &ctx).unwrap();
                        assert_eq!(back.x, eq.x, "x round trip d={d} t={t}");
                        assert_eq!(back.y, eq.y, "y round trip d={d} t={t}");
                        assert_eq!(back.z, eq.z, "z round trip d={d} t={t}");
                    }
                }
            }
        }
    }

    #[test]
    fn forward_map_output_satisfies_equitable_relations_or_errors() {
        let ctx = ctx(0, IdentKind::Primary);
        let m = IrreducibleModule::chevalley(2, 1, &ctx);
        let mut ch = chevalley_gens_of(m.table()).unwrap();
        assert!(equitable_from_chevalley(&ch, &ctx).is_ok());
        // Break e: the mapped tuple can no longer satisfy the relations.
        ch.e.set_entry(1, 0, Rat::int(7));
        assert!(matches!(
            equitable_from_chevalley(&ch, &ctx),
            Err(Error::RelationFailure(_))
        ));
    }

    #[test]
    fn cross_identities_hold_on_full_realizations() {
        for ident in [IdentKind::Primary, IdentKind::Secondary] {
            for t in [-2, 0, 1] {
                let ctx = ctx(t, ident);
                for basis in [BasisKind::Chevalley, BasisKind::Equitable] {
                    let r = Realization::irreducible(&ctx, 2, basis).unwrap();
                    for c in cross_identities(r.table(), 2, r.dim(), &ctx) {
                        assert!(
                            c.pass,
                            "{} failed (t={t}, {:?}, {:?}): {:?}",
                            c.identity,
                            ident,
                            basis,
                            c.counterexample
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn formal_rewriting_matches_the_matrix_map() {
        // Evaluating the formal Chevalley expression of x on a Chevalley
        // module equals the matrix produced by the forward map.
        let ctx = ctx(2, IdentKind::Secondary);
        let m = IrreducibleModule::chevalley(3, 1, &ctx);
        let ch = chevalley_gens_of(m.table()).unwrap();
        let eq = equitable_from_chevalley(&ch, &ctx).unwrap();
        let x_expr = chevalley_expression_of(GenSym::X, &ctx);
        assert_eq!(x_expr.eval(m.table(), 4).unwrap(), eq.x);
        let z_expr = chevalley_expression_of(GenSym::Z, &ctx);
        assert_eq!(z_expr.eval(m.table(), 4).unwrap(), eq.z);
    }
}
