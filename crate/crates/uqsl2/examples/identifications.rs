//! The two-parameter family of identifications between the Chevalley and
//! equitable presentations, exercised in both directions.
//!
//! For every integer t and every square root θ of q (or of q^{-1}), the
//! primary identification sets y = k and expresses x and z through e and f
//! twisted by powers of k; the secondary identification sets y = k^{-1} and
//! swaps the roles of e and f. Both directions compose to the identity, and
//! each direction carries the defining relations of one presentation to the
//! other. Run with `cargo run --example identifications`.

use uqsl2::identification::{
    chevalley_from_equitable, chevalley_gens_of, cross_identities, equitable_from_chevalley,
};
use uqsl2::module::full_symbol_table;
use uqsl2::{IdentKind, IrreducibleModule, QContext, Rat, ThetaMode};

fn main() -> uqsl2::Result<()> {
    let d = 2;
    for ident in [IdentKind::Primary, IdentKind::Secondary] {
        for t in [-1, 0, 2] {
            let ctx = QContext::new(Rat::int(4), Rat::int(-2), ThetaMode::SqQ, t, ident)?;
            let module = IrreducibleModule::chevalley(d, 1, &ctx);
            let ch = chevalley_gens_of(module.table())?;

            // Forward: equitable generators out of Chevalley ones. The
            // constructor refuses to return generators that do not satisfy
            // the equitable relations, so arriving here is already a check.
            let eq = equitable_from_chevalley(&ch, &ctx)?;
            println!(
                "ident = {}, t = {t}: built x, y, z (y is k^{})",
                ident.name(),
                if ident == IdentKind::Primary { "+1" } else { "-1" },
            );

            // Backward: recover e, f, k and compare entry by entry.
            let back = chevalley_from_equitable(&eq, &ctx)?;
            assert_eq!(back.e, ch.e);
            assert_eq!(back.f, ch.f);
            assert_eq!(back.k, ch.k);
            assert_eq!(back.k_inv, ch.k_inv);
            println!("  round trip restored e, f, k, k^-1 exactly");

            // The cross identities tie e and f to the nilpotent parts n_x
            // and n_z through θ and powers of y.
            let table = full_symbol_table(module.table(), module.dim(), &ctx)?;
            for check in cross_identities(&table, d, module.dim(), &ctx) {
                println!("  {}: pass = {}", check.identity, check.pass);
                assert!(check.pass, "{:?}", check.counterexample);
            }
        }
    }
    println!("all checks passed");
    Ok(())
}
