//! Builds irreducible modules in the Chevalley presentation and verifies the
//! defining relations and the Casimir element exactly.
//!
//! The module of diameter d and sign ε has basis v_0, …, v_d on which
//!
//! ```text
//!   k v_i = ε q^{d-2i} v_i
//!   f v_i = [i+1]_q v_{i+1}        (f v_d = 0)
//!   e v_i = ε [d-i+1]_q v_{i-1}    (e v_0 = 0)
//! ```
//!
//! with [n]_q = (q^n − q^{-n})/(q − q^{-1}). Run with
//! `cargo run --example chevalley_basics`.

use uqsl2::expr::{casimir_chevalley, chevalley_relations, GenSym};
use uqsl2::module::casimir_scalar;
use uqsl2::{BasisKind, IdentKind, IrreducibleModule, Matrix, QContext, Rat, ThetaMode};

fn main() -> uqsl2::Result<()> {
    let ctx = QContext::new(Rat::int(4), Rat::int(-2), ThetaMode::SqQ, 0, IdentKind::Primary)?;
    println!("q = {}", ctx.q());

    for epsilon in [1, -1] {
        let d = 3;
        let module = IrreducibleModule::chevalley(d, epsilon, &ctx);
        println!("\nmodule: d = {d}, epsilon = {epsilon}, dim = {}", module.dim());
        println!("k  = {:?}", module.generator(GenSym::K)?);
        println!("e  = {:?}", module.generator(GenSym::E)?);
        println!("f  = {:?}", module.generator(GenSym::F)?);

        // Every defining relation evaluates to the zero matrix.
        for (name, relation) in chevalley_relations(&ctx) {
            let residual = relation.eval(module.table(), module.dim())?;
            println!("{name}: residual is zero = {}", residual.is_zero());
            assert!(residual.is_zero());
        }

        // The Casimir element (q - q^{-1})^2 ef + q^{-1} k + q k^{-1} acts as
        // the scalar ε (q^{d+1} + q^{-d-1}).
        let casimir = casimir_chevalley(&ctx).eval(module.table(), module.dim())?;
        let expected = casimir_scalar(d, epsilon, &ctx);
        println!("Casimir scalar = {expected}");
        assert_eq!(casimir, Matrix::scalar(module.dim(), &expected));
    }

    // The same module in the other presentation carries the same Casimir
    // spectrum; the trace is basis independent.
    let module = IrreducibleModule::equitable(3, 1, &ctx);
    println!("\nequitable basis of the d = 3 module: {}", module.basis().name());
    assert_eq!(module.basis(), BasisKind::Equitable);
    println!("all checks passed");
    Ok(())
}
