//! Finite-dimensional irreducible modules and their direct sums.
//!
//! For each diameter d ≥ 0 and sign ε ∈ {1, -1} there is (up to isomorphism)
//! one irreducible module of dimension d+1. Two standard bases are
//! constructed exactly:
//!
//! **Chevalley basis** `v_0, …, v_d` (weight basis for k):
//!
//! ```text
//! k v_i = ε q^{d-2i} v_i
//! f v_i = [i+1]_q v_{i+1}   (f v_d = 0)
//! e v_i = ε [d-i+1]_q v_{i-1}   (e v_0 = 0)
//! ```
//!
//! **Equitable basis** `u_0, …, u_d`:
//!
//! ```text
//! x u_i = ε q^{2i-d} u_i + ε (q^d - q^{2i-d}) u_{i+1}   (last term absent at i = d)
//! y u_i = ε q^{d-2i} u_i
//! z u_i = ε q^{2i-d} u_i + ε (q^{-d} - q^{2i-d}) u_{i-1} (last term absent at i = 0)
//! ```
//!
//! Type-1 modules (ε = +1) admit a weight decomposition: the q^λ-eigenspace
//! of k is the weight space V(λ), and λ runs over d, d-2, …, -d. Modules
//! with ε = -1 satisfy all defining relations but have no integral weights;
//! the constructions that need weights reject them.
//!
//! The ν- and n-elements are derived matrices:
//! `νx = q(1 - yz) = q⁻¹(1 - zy)` (cyclically), and `n✲ = ν✲ / (q - q⁻¹)`;
//! each n acts nilpotently with index exactly d+1 on the irreducible of
//! diameter d.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::{casimir_chevalley, casimir_equitable_forms, AlgebraExpression, GenSym, SymbolTable};
use crate::identification;
use crate::linalg::Matrix;
use crate::scalar::{QContext, Rat};

/// Which standard basis a module was constructed in.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum BasisKind {
    #[serde(rename = "chevalley")]
    Chevalley,
    #[serde(rename = "equitable")]
    Equitable,
}

impl BasisKind {
    pub fn name(self) -> &'static str {
        match self {
            BasisKind::Chevalley => "chevalley",
            BasisKind::Equitable => "equitable",
        }
    }
}

impl std::str::FromStr for BasisKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chevalley" => Ok(BasisKind::Chevalley),
            "equitable" => Ok(BasisKind::Equitable),
            other => Err(Error::Config(format!(
                "unknown basis `{other}` (expected `chevalley` or `equitable`)"
            ))),
        }
    }
}

/// One irreducible module with its native generator matrices.
///
/// JSON form:
/// `{"d": 1, "epsilon": 1, "basis": "chevalley", "generators": {"e": {...}, ...}}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "ModuleRepr", into = "ModuleRepr")]
pub struct IrreducibleModule {
    d: usize,
    epsilon: i32,
    basis: BasisKind,
    gens: SymbolTable,
}

#[derive(Serialize, Deserialize)]
struct ModuleRepr {
    d: usize,
    epsilon: i32,
    basis: BasisKind,
    generators: BTreeMap<String, Matrix>,
}

impl TryFrom<ModuleRepr> for IrreducibleModule {
    type Error = Error;
    fn try_from(r: ModuleRepr) -> Result<Self> {
        if r.epsilon != 1 && r.epsilon != -1 {
            return Err(Error::Config(format!("epsilon must be 1 or -1, got {}", r.epsilon)));
        }
        let dim = r.d + 1;
        let mut gens = SymbolTable::new();
        for (name, m) in r.generators {
            let sym = GenSym::from_name(&name)
                .ok_or_else(|| Error::UnknownSymbol(name.clone()))?;
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::Dimension(format!(
                    "generator `{name}` is {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
            gens.insert(sym, m);
        }
        Ok(IrreducibleModule { d: r.d, epsilon: r.epsilon, basis: r.basis, gens })
    }
}

impl From<IrreducibleModule> for ModuleRepr {
    fn from(m: IrreducibleModule) -> Self {
        ModuleRepr {
            d: m.d,
            epsilon: m.epsilon,
            basis: m.basis,
            generators: m.gens.into_iter().map(|(s, g)| (s.name().to_string(), g)).collect(),
        }
    }
}

impl IrreducibleModule {
    /// The irreducible of diameter d and sign ε in the Chevalley basis,
    /// realizing `e`, `f`, `k`, `k⁻¹`.
    pub fn chevalley(d: usize, epsilon: i32, ctx: &QContext) -> Self {
        assert!(epsilon == 1 || epsilon == -1, "epsilon must be ±1");
        let dim = d + 1;
        let eps = Rat::int(epsilon as i64);
        let mut e = Matrix::zeros(dim, dim);
        let mut f = Matrix::zeros(dim, dim);
        for i in 1..=d {
            e.set_entry(i - 1, i, &eps * &ctx.q_int((d - i + 1) as i64));
        }
        for i in 0..d {
            f.set_entry(i + 1, i, ctx.q_int(i as i64 + 1));
        }
        let k_diag: Vec<Rat> = (0..dim).map(|i| &eps * &ctx.q_pow(d as i64 - 2 * i as i64)).collect();
        let kinv_diag: Vec<Rat> = (0..dim).map(|i| &eps * &ctx.q_pow(2 * i as i64 - d as i64)).collect();
        let mut gens = SymbolTable::new();
        gens.insert(GenSym::E, e);
        gens.insert(GenSym::F, f);
        gens.insert(GenSym::K, Matrix::diagonal(&k_diag));
        gens.insert(GenSym::KInv, Matrix::diagonal(&kinv_diag));
        IrreducibleModule { d, epsilon, basis: BasisKind::Chevalley, gens }
    }

    /// The irreducible of diameter d and sign ε in the equitable basis,
    /// realizing `x`, `y`, `y⁻¹`, `z`.
    pub fn equitable(d: usize, epsilon: i32, ctx: &QContext) -> Self {
        assert!(epsilon == 1 || epsilon == -1, "epsilon must be ±1");
        let dim = d + 1;
        let eps = Rat::int(epsilon as i64);
        let di = d as i64;
        let mut x = Matrix::zeros(dim, dim);
        let mut z = Matrix::zeros(dim, dim);
        for i in 0..dim {
            let low = ctx.q_pow(2 * i as i64 - di);
            x.set_entry(i, i, &eps * &low);
            z.set_entry(i, i, &eps * &low);
        }
        for i in 0..d {
            x.set_entry(i, i + 1, &eps * &(ctx.q_pow(di) - ctx.q_pow(2 * i as i64 - di)));
        }
        for j in 1..dim {
            z.set_entry(j, j - 1, &eps * &(ctx.q_pow(-di) - ctx.q_pow(2 * j as i64 - di)));
        }
        let y_diag: Vec<Rat> = (0..dim).map(|i| &eps * &ctx.q_pow(di - 2 * i as i64)).collect();
        let yinv_diag: Vec<Rat> = (0..dim).map(|i| &eps * &ctx.q_pow(2 * i as i64 - di)).collect();
        let mut gens = SymbolTable::new();
        gens.insert(GenSym::X, x);
        gens.insert(GenSym::Y, Matrix::diagonal(&y_diag));
        gens.insert(GenSym::YInv, Matrix::diagonal(&yinv_diag));
        gens.insert(GenSym::Z, z);
        IrreducibleModule { d, epsilon, basis: BasisKind::Equitable, gens }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn epsilon(&self) -> i32 {
        self.epsilon
    }

    pub fn basis(&self) -> BasisKind {
        self.basis
    }

    pub fn dim(&self) -> usize {
        self.d + 1
    }

    /// The native generator matrices (four symbols).
    pub fn table(&self) -> &SymbolTable {
        &self.gens
    }

    pub fn generator(&self, sym: GenSym) -> Result<&Matrix> {
        self.gens.get(&sym).ok_or_else(|| Error::UnknownSymbol(sym.name().to_string()))
    }
}

/// The ν-elements and their normalizations n = ν/(q - q⁻¹).
#[derive(Clone, Debug)]
pub struct NilpotentParts {
    pub nu_x: Matrix,
    pub nu_y: Matrix,
    pub nu_z: Matrix,
    pub n_x: Matrix,
    pub n_y: Matrix,
    pub n_z: Matrix,
}

/// Computes `νx = q(1 - yz)`, `νy = q(1 - zx)`, `νz = q(1 - xy)` from a
/// table realizing x, y, z, cross-checking each against its second form
/// `q⁻¹(1 - zy)`, `q⁻¹(1 - xz)`, `q⁻¹(1 - yx)`; disagreement means the
/// table does not satisfy the equitable relations and is reported as
/// [`Error::Inconsistent`].
pub fn nilpotent_parts(table: &SymbolTable, dim: usize, ctx: &QContext) -> Result<NilpotentParts> {
    let get = |s: GenSym| -> Result<&Matrix> {
        table.get(&s).ok_or_else(|| Error::UnknownSymbol(s.name().to_string()))
    };
    let x = get(GenSym::X)?;
    let y = get(GenSym::Y)?;
    let z = get(GenSym::Z)?;
    let id = Matrix::identity(dim);
    let q = ctx.q_pow(1);
    let qi = ctx.q_pow(-1);
    let mut nu = Vec::with_capacity(3);
    for (name, a, b) in [("νx", y, z), ("νy", z, x), ("νz", x, y)] {
        let first = (&id - &(a * b)).scale(&q);
        let second = (&id - &(b * a)).scale(&qi);
        if first != second {
            return Err(Error::Inconsistent(format!(
                "{name}: q(1 - {0}{1}) and q⁻¹(1 - {1}{0}) disagree",
                if name == "νx" { "y" } else if name == "νy" { "z" } else { "x" },
                if name == "νx" { "z" } else if name == "νy" { "x" } else { "y" },
            )));
        }
        nu.push(first);
    }
    let scale = ctx.q_minus_q_inv().inv();
    let n: Vec<Matrix> = nu.iter().map(|m| m.scale(&scale)).collect();
    let mut it = nu.into_iter();
    let (nu_x, nu_y, nu_z) = (it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
    let mut it = n.into_iter();
    let (n_x, n_y, n_z) = (it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
    Ok(NilpotentParts { nu_x, nu_y, nu_z, n_x, n_y, n_z })
}

/// The normalized Casimir element `Λ = (q - q⁻¹)² ef + q⁻¹ k + q k⁻¹`
/// evaluated on a table realizing the Chevalley generators.
pub fn casimir_matrix(table: &SymbolTable, dim: usize, ctx: &QContext) -> Result<Matrix> {
    casimir_chevalley(ctx).eval(table, dim)
}

/// The scalar by which Λ acts on the irreducible of diameter d and sign ε:
/// `ε (q^{d+1} + q^{-d-1})`.
pub fn casimir_scalar(d: usize, epsilon: i32, ctx: &QContext) -> Rat {
    let e = d as i64 + 1;
    &Rat::int(epsilon as i64) * &(ctx.q_pow(e) + ctx.q_pow(-e))
}

/// Evaluates all six equitable expressions for Λ on a table realizing
/// x, y, z; on a valid module they are pairwise equal.
pub fn casimir_six_forms(
    table: &SymbolTable,
    dim: usize,
    ctx: &QContext,
) -> Result<Vec<(&'static str, Matrix)>> {
    casimir_equitable_forms(ctx)
        .into_iter()
        .map(|(name, expr)| Ok((name, expr.eval(table, dim)?)))
        .collect()
}

/// Expected matrix of `nx` on the equitable basis of the irreducible of
/// diameter d: single subdiagonal `(nx)_{j, j-1} = q^{1-j} [j]_q`.
/// Independent of ε.
pub fn expected_nx_equitable(d: usize, ctx: &QContext) -> Matrix {
    let mut m = Matrix::zeros(d + 1, d + 1);
    for j in 1..=d {
        m.set_entry(j, j - 1, &ctx.q_pow(1 - j as i64) * &ctx.q_int(j as i64));
    }
    m
}

/// Expected matrix of `nz` on the equitable basis: single superdiagonal
/// `(nz)_{i, i+1} = -q^{d-1-i} [d-i]_q`. Independent of ε.
pub fn expected_nz_equitable(d: usize, ctx: &QContext) -> Matrix {
    let mut m = Matrix::zeros(d + 1, d + 1);
    for i in 0..d {
        m.set_entry(
            i,
            i + 1,
            -&(&ctx.q_pow(d as i64 - 1 - i as i64) * &ctx.q_int(d as i64 - i as i64)),
        );
    }
    m
}

/// Direct sum of type-1 irreducibles with block-diagonal generator action.
#[derive(Clone, Debug)]
pub struct TypeOneModule {
    summands: Vec<IrreducibleModule>,
    offsets: Vec<usize>,
    dim: usize,
    gens: SymbolTable,
}

/// Builds the direct sum of the given irreducibles. All summands must have
/// ε = +1 ([`Error::MixedType`] otherwise) and share one basis kind.
pub fn direct_sum(parts: Vec<IrreducibleModule>) -> Result<TypeOneModule> {
    if parts.is_empty() {
        return Err(Error::Config("direct sum of zero summands".into()));
    }
    if let Some(bad) = parts.iter().find(|p| p.epsilon() != 1) {
        return Err(Error::MixedType(format!(
            "summand of diameter {} has epsilon = -1; direct sums are built from type-1 modules",
            bad.d()
        )));
    }
    let basis = parts[0].basis();
    assert!(
        parts.iter().all(|p| p.basis() == basis),
        "direct sum of modules in different bases"
    );
    let mut offsets = Vec::with_capacity(parts.len());
    let mut dim = 0;
    for p in &parts {
        offsets.push(dim);
        dim += p.dim();
    }
    let mut gens = SymbolTable::new();
    for sym in parts[0].table().keys() {
        let blocks: Vec<Matrix> = parts.iter().map(|p| p.table()[sym].clone()).collect();
        gens.insert(*sym, Matrix::block_diagonal(&blocks));
    }
    Ok(TypeOneModule { summands: parts, offsets, dim, gens })
}

impl TypeOneModule {
    /// A single type-1 irreducible viewed as a one-summand sum.
    pub fn from_irreducible(m: IrreducibleModule) -> Result<Self> {
        direct_sum(vec![m])
    }

    pub fn summands(&self) -> &[IrreducibleModule] {
        &self.summands
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> BasisKind {
        self.summands[0].basis()
    }

    pub fn table(&self) -> &SymbolTable {
        &self.gens
    }
}

/// Weight decomposition of a type-1 module: for each integer λ the sorted
/// list of basis indices spanning the q^λ-eigenspace of k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDecomposition {
    classes: BTreeMap<i64, Vec<usize>>,
    dim: usize,
}

impl WeightDecomposition {
    /// Reads the weights off a diagonal k matrix. Each diagonal entry must
    /// be an exact integer power of q ([`Error::NonIntegralWeight`]
    /// otherwise — in particular for every ε = -1 module).
    pub fn from_diagonal_k(k: &Matrix, ctx: &QContext) -> Result<Self> {
        assert!(k.is_square(), "weight decomposition of non-square k");
        let dim = k.rows();
        for i in 0..dim {
            for j in 0..dim {
                if i != j && !k.entry(i, j).is_zero() {
                    return Err(Error::Inconsistent(format!(
                        "k is not diagonal: nonzero entry at ({i},{j})"
                    )));
                }
            }
        }
        let mut classes: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        let bound = dim as i64 + 1;
        'entries: for i in 0..dim {
            let v = k.entry(i, i);
            let mut up = Rat::one();
            let mut down = Rat::one();
            for lam in 0..=bound {
                if &up == v {
                    classes.entry(lam).or_default().push(i);
                    continue 'entries;
                }
                if lam > 0 && &down == v {
                    classes.entry(-lam).or_default().push(i);
                    continue 'entries;
                }
                up = up * ctx.q_pow(1);
                down = down * ctx.q_pow(-1);
            }
            return Err(Error::NonIntegralWeight(v.to_string()));
        }
        Ok(WeightDecomposition { classes, dim })
    }

    /// Weights present, ascending.
    pub fn lambdas(&self) -> Vec<i64> {
        self.classes.keys().copied().collect()
    }

    pub fn classes(&self) -> &BTreeMap<i64, Vec<usize>> {
        &self.classes
    }

    /// Basis indices of the weight-λ space (empty if λ is not a weight).
    pub fn indices(&self, lambda: i64) -> &[usize] {
        self.classes.get(&lambda).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The weight of one basis index.
    pub fn weight_of(&self, index: usize) -> Option<i64> {
        self.classes
            .iter()
            .find(|(_, idxs)| idxs.contains(&index))
            .map(|(l, _)| *l)
    }

    /// Diagonal 0/1 projection onto the weight-λ coordinates.
    pub fn projector(&self, lambda: i64) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for &i in self.indices(lambda) {
            m.set_entry(i, i, Rat::one());
        }
        m
    }
}

/// A type-1 module with **every** alphabet symbol realized: the native
/// generators, the partner presentation's generators transported through the
/// active identification of `ctx`, the ν/n elements, and Λ — plus the weight
/// decomposition. This is the working object of the higher-level suites.
#[derive(Clone, Debug)]
pub struct Realization {
    shape: Vec<usize>,
    basis: BasisKind,
    dim: usize,
    gens: SymbolTable,
    weights: WeightDecomposition,
}

impl Realization {
    /// Realizes the direct sum of type-1 irreducibles with the given
    /// diameters, constructed in `basis` and completed via `ctx.ident()`.
    pub fn new(ctx: &QContext, diameters: &[usize], basis: BasisKind) -> Result<Self> {
        let parts: Vec<IrreducibleModule> = diameters
            .iter()
            .map(|&d| match basis {
                BasisKind::Chevalley => IrreducibleModule::chevalley(d, 1, ctx),
                BasisKind::Equitable => IrreducibleModule::equitable(d, 1, ctx),
            })
            .collect();
        let sum = direct_sum(parts)?;
        let dim = sum.dim();
        let gens = full_symbol_table(sum.table(), dim, ctx)?;
        let weights = WeightDecomposition::from_diagonal_k(&gens[&GenSym::K], ctx)?;
        Ok(Realization { shape: diameters.to_vec(), basis, dim, gens, weights })
    }

    /// Single irreducible convenience constructor.
    pub fn irreducible(ctx: &QContext, d: usize, basis: BasisKind) -> Result<Self> {
        Realization::new(ctx, &[d], basis)
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn basis(&self) -> BasisKind {
        self.basis
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn table(&self) -> &SymbolTable {
        &self.gens
    }

    pub fn weights(&self) -> &WeightDecomposition {
        &self.weights
    }

    pub fn matrix(&self, sym: GenSym) -> Result<&Matrix> {
        self.gens.get(&sym).ok_or_else(|| Error::UnknownSymbol(sym.name().to_string()))
    }

    /// The diameter when the realization is a single irreducible;
    /// [`Error::NotTypeOne`] when it is a proper direct sum (the operators
    /// that need this — caps, rotators — are defined per irreducible).
    pub fn single_diameter(&self) -> Result<usize> {
        if self.shape.len() == 1 {
            Ok(self.shape[0])
        } else {
            Err(Error::NotTypeOne(format!(
                "expected a single irreducible, got the direct sum {:?}",
                self.shape
            )))
        }
    }

    /// Block offsets and diameters `(offset, d)` of the summands.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.shape.len());
        let mut off = 0;
        for &d in &self.shape {
            out.push((off, d));
            off += d + 1;
        }
        out
    }

    /// Evaluates an expression on this realization.
    pub fn eval(&self, expr: &AlgebraExpression) -> Result<Matrix> {
        expr.eval(&self.gens, self.dim)
    }

    /// Fault-injection hook for negative controls: adds `delta` to one entry
    /// of one realized matrix, leaving everything else untouched. Checks run
    /// on the perturbed realization must notice.
    pub fn perturb_generator(&mut self, sym: GenSym, row: usize, col: usize, delta: Rat) {
        let m = self.gens.get_mut(&sym).expect("perturbing an unrealized symbol");
        let v = m.entry(row, col) + &delta;
        m.set_entry(row, col, v);
    }
}

/// Completes a four-generator table (either presentation) to the full
/// sixteen-symbol table: transports the partner generators through the
/// active identification, derives ν/n, and evaluates Λ. Works for either ε
/// (no weights involved).
pub fn full_symbol_table(native: &SymbolTable, dim: usize, ctx: &QContext) -> Result<SymbolTable> {
    let mut gens = native.clone();
    if gens.contains_key(&GenSym::E) {
        let ch = identification::ChevalleyGens {
            e: gens[&GenSym::E].clone(),
            f: gens[&GenSym::F].clone(),
            k: gens[&GenSym::K].clone(),
            k_inv: gens[&GenSym::KInv].clone(),
        };
        let eq = identification::equitable_from_chevalley(&ch, ctx)?;
        gens.insert(GenSym::X, eq.x);
        gens.insert(GenSym::Y, eq.y);
        gens.insert(GenSym::YInv, eq.y_inv);
        gens.insert(GenSym::Z, eq.z);
    } else {
        let eq = identification::EquitableGens {
            x: gens[&GenSym::X].clone(),
            y: gens[&GenSym::Y].clone(),
            y_inv: gens[&GenSym::YInv].clone(),
            z: gens[&GenSym::Z].clone(),
        };
        let ch = identification::chevalley_from_equitable(&eq, ctx)?;
        gens.insert(GenSym::E, ch.e);
        gens.insert(GenSym::F, ch.f);
        gens.insert(GenSym::K, ch.k);
        gens.insert(GenSym::KInv, ch.k_inv);
    }
    let parts = nilpotent_parts(&gens, dim, ctx)?;
    gens.insert(GenSym::NuX, parts.nu_x);
    gens.insert(GenSym::NuY, parts.nu_y);
    gens.insert(GenSym::NuZ, parts.nu_z);
    gens.insert(GenSym::Nx, parts.n_x);
    gens.insert(GenSym::Ny, parts.n_y);
    gens.insert(GenSym::Nz, parts.n_z);
    let lambda = casimir_matrix(&gens, dim, ctx)?;
    gens.insert(GenSym::Casimir, lambda);
    Ok(gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{IdentKind, ThetaMode};

    fn ctx() -> QContext {
        QContext::new(Rat::int(4), Rat::int(-2), ThetaMode::SqQ, 0, IdentKind::Primary).unwrap()
    }

    #[test]
    fn chevalley_k_on_the_two_dimensional_module() {
        let m = IrreducibleModule::chevalley(1, 1, &ctx());
        assert_eq!(
            m.generator(GenSym::K).unwrap(),
            &Matrix::diagonal(&[Rat::int(4), Rat::frac(1, 4)])
        );
        assert_eq!(
            m.generator(GenSym::E).unwrap(),
            &Matrix::new(2, 2, vec![Rat::zero(), Rat::one(), Rat::zero(), Rat::zero()]).unwrap()
        );
        assert_eq!(
            m.generator(GenSym::F).unwrap(),
            &Matrix::new(2, 2, vec![Rat::zero(), Rat::zero(), Rat::one(), Rat::zero()]).unwrap()
        );
    }

    #[test]
    fn chevalley_relations_hold_for_both_signs_small_diameters() {
        let ctx = ctx();
        for d in 0..=4 {
            for eps in [1, -1] {
                let m = IrreducibleModule::chevalley(d, eps, &ctx);
                for (name, rel) in crate::expr::chevalley_relations(&ctx) {
                    let v = rel.eval(m.table(), m.dim()).unwrap();
                    assert!(v.is_zero(), "d={d} eps={eps}: {name} = {v:?}");
                }
            }
        }
    }

    #[test]
    fn equitable_matrices_on_the_two_dimensional_module() {
        // d = 1, ε = 1, q = 4: x = [[1/4, 15/4], [0, 4]], y = diag(4, 1/4),
        // z = [[1/4, 0], [-15/4, 4]].
        let m = IrreducibleModule::equitable(1, 1, &ctx());
        let x = Matrix::new(
            2,
            2,
            vec![Rat::frac(1, 4), Rat::frac(15, 4), Rat::zero(), Rat::int(4)],
        )
        .unwrap();
        let z = Matrix::new(
            2,
            2,
            vec![Rat::frac(1, 4), Rat::zero(), Rat::frac(-15, 4), Rat::int(4)],
        )
        .unwrap();
        assert_eq!(m.generator(GenSym::X).unwrap(), &x);
        assert_eq!(m.generator(GenSym::Z).unwrap(), &z);
        assert_eq!(
            m.generator(GenSym::Y).unwrap(),
            &Matrix::diagonal(&[Rat::int(4), Rat::frac(1, 4)])
        );
    }

    #[test]
    fn equitable_relations_hold_for_both_signs_small_diameters() {
        let ctx = ctx();
        for d in 0..=4 {
            for eps in [1, -1] {
                let m = IrreducibleModule::equitable(d, eps, &ctx);
                for (name, rel) in crate::expr::equitable_relations(&ctx) {
                    let v = rel.eval(m.table(), m.dim()).unwrap();
                    assert!(v.is_zero(), "d={d} eps={eps}: {name} = {v:?}");
                }
            }
        }
    }

    #[test]
    fn nilpotent_parts_match_the_displayed_single_diagonal_forms() {
        let ctx = ctx();
        for d in 0..=5 {
            let m = IrreducibleModule::equitable(d, 1, &ctx);
            let parts = nilpotent_parts(m.table(), m.dim(), &ctx).unwrap();
            assert_eq!(parts.n_x, expected_nx_equitable(d, &ctx), "nx at d={d}");
            assert_eq!(parts.n_z, expected_nz_equitable(d, &ctx), "nz at d={d}");
            // nu = (q - q⁻¹) n
            assert_eq!(parts.nu_x, parts.n_x.scale(&ctx.q_minus_q_inv()));
        }
    }

    #[test]
    fn two_dimensional_nilpotent_parts_explicitly() {
        // d = 1: nx has single entry 1 at (1,0); nz single entry -1 at (0,1),
        // independent of q.
        let ctx = ctx();
        let m = IrreducibleModule::equitable(1, 1, &ctx);
        let parts = nilpotent_parts(m.table(), 2, &ctx).unwrap();
        assert_eq!(
            parts.n_x,
            Matrix::new(2, 2, vec![Rat::zero(), Rat::zero(), Rat::one(), Rat::zero()]).unwrap()
        );
        assert_eq!(
            parts.n_z,
            Matrix::new(2, 2, vec![Rat::zero(), Rat::int(-1), Rat::zero(), Rat::zero()]).unwrap()
        );
    }

    #[test]
    fn n_elements_are_nilpotent_of_index_exactly_d_plus_one() {
        let ctx = ctx();
        for d in 0..=6 {
            for eps in [1, -1] {
                let m = IrreducibleModule::equitable(d, eps, &ctx);
                let parts = nilpotent_parts(m.table(), m.dim(), &ctx).unwrap();
                for (name, n) in [("nx", &parts.n_x), ("ny", &parts.n_y), ("nz", &parts.n_z)] {
                    assert_eq!(
                        n.nilpotency_index().unwrap(),
                        d + 1,
                        "{name} at d={d}, eps={eps}"
                    );
                }
            }
        }
    }

    #[test]
    fn casimir_acts_by_the_expected_scalar() {
        let ctx = ctx();
        // d = 1, ε = 1, q = 4: Λ = (q² + q⁻²) I = 257/16 I.
        let m = IrreducibleModule::chevalley(1, 1, &ctx);
        let lam = casimir_matrix(m.table(), 2, &ctx).unwrap();
        assert_eq!(lam, Matrix::scalar(2, &Rat::frac(257, 16)));
        assert_eq!(casimir_scalar(1, 1, &ctx), Rat::frac(257, 16));
        // d = 2, ε = -1: Λ = -(q³ + q⁻³) I = -4097/64 I.
        let m = IrreducibleModule::chevalley(2, -1, &ctx);
        let lam = casimir_matrix(m.table(), 3, &ctx).unwrap();
        assert_eq!(lam, Matrix::scalar(3, &Rat::frac(-4097, 64)));
        assert_eq!(casimir_scalar(2, -1, &ctx), Rat::frac(-4097, 64));
    }

    #[test]
    fn six_casimir_forms_agree_on_equitable_modules() {
        let ctx = ctx();
        for d in 0..=4 {
            for eps in [1, -1] {
                let m = IrreducibleModule::equitable(d, eps, &ctx);
                let forms = casimir_six_forms(m.table(), m.dim(), &ctx).unwrap();
                let expected = Matrix::scalar(m.dim(), &casimir_scalar(d, eps, &ctx));
                for (name, form) in &forms {
                    assert_eq!(form, &expected, "{name} at d={d} eps={eps}");
                }
            }
        }
    }

    #[test]
    fn direct_sum_rejects_epsilon_minus_one() {
        let ctx = ctx();
        let good = IrreducibleModule::chevalley(1, 1, &ctx);
        let bad = IrreducibleModule::chevalley(2, -1, &ctx);
        assert!(matches!(direct_sum(vec![good, bad]), Err(Error::MixedType(_))));
    }

    #[test]
    fn direct_sum_is_block_diagonal() {
        let ctx = ctx();
        let a = IrreducibleModule::chevalley(1, 1, &ctx);
        let b = IrreducibleModule::chevalley(3, 1, &ctx);
        let s = direct_sum(vec![a.clone(), b.clone()]).unwrap();
        assert_eq!(s.dim(), 6);
        assert_eq!(s.offsets(), &[0, 2]);
        for sym in [GenSym::E, GenSym::F, GenSym::K, GenSym::KInv] {
            assert_eq!(
                &s.table()[&sym],
                &Matrix::block_diagonal(&[a.table()[&sym].clone(), b.table()[&sym].clone()]),
                "{}",
                sym.name()
            );
        }
    }

    #[test]
    fn weight_decomposition_of_a_direct_sum() {
        // V(1) ⊕ V(3) at q = 4: weights 3: [2], 1: [0, 3], -1: [1, 4], -3: [5].
        let ctx = ctx();
        let s = direct_sum(vec![
            IrreducibleModule::chevalley(1, 1, &ctx),
            IrreducibleModule::chevalley(3, 1, &ctx),
        ])
        .unwrap();
        let w = WeightDecomposition::from_diagonal_k(&s.table()[&GenSym::K], &ctx).unwrap();
        assert_eq!(w.lambdas(), vec![-3, -1, 1, 3]);
        assert_eq!(w.indices(3), &[2]);
        assert_eq!(w.indices(1), &[0, 3]);
        assert_eq!(w.indices(-1), &[1, 4]);
        assert_eq!(w.indices(-3), &[5]);
        assert_eq!(w.weight_of(3), Some(1));
        assert_eq!(w.indices(0), &[] as &[usize]);
    }

    #[test]
    fn epsilon_minus_one_has_no_integral_weights() {
        let ctx = ctx();
        let m = IrreducibleModule::chevalley(2, -1, &ctx);
        let r = WeightDecomposition::from_diagonal_k(m.generator(GenSym::K).unwrap(), &ctx);
        assert!(matches!(r, Err(Error::NonIntegralWeight(_))));
    }

    #[test]
    fn realization_carries_the_full_alphabet() {
        let ctx = ctx();
        let r = Realization::irreducible(&ctx, 2, BasisKind::Chevalley).unwrap();
        for sym in [
            GenSym::E,
            GenSym::F,
            GenSym::K,
            GenSym::KInv,
            GenSym::X,
            GenSym::Y,
            GenSym::YInv,
            GenSym::Z,
            GenSym::NuX,
            GenSym::NuY,
            GenSym::NuZ,
            GenSym::Nx,
            GenSym::Ny,
            GenSym::Nz,
            GenSym::Casimir,
        ] {
            assert!(r.table().contains_key(&sym), "missing {}", sym.name());
        }
        assert_eq!(r.weights().lambdas(), vec![-2, 0, 2]);
        assert!(Realization::new(&ctx, &[1, 2], BasisKind::Equitable)
            .unwrap()
            .single_diameter()
            .is_err());
    }

    #[test]
    fn module_json_round_trip() {
        let ctx = ctx();
        let m = IrreducibleModule::chevalley(1, 1, &ctx);
        let s = serde_json::to_string(&m).unwrap();
        assert!(s.contains("\"basis\":\"chevalley\""), "{s}");
        assert!(s.contains("\"epsilon\":1"), "{s}");
        let back: IrreducibleModule = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        // Bad epsilon is rejected.
        let bad = s.replace("\"epsilon\":1", "\"epsilon\":2");
        assert!(serde_json::from_str::<IrreducibleModule>(&bad).is_err());
    }

    #[test]
    fn perturbation_changes_exactly_one_entry() {
        let ctx = ctx();
        let mut r = Realization::irreducible(&ctx, 2, BasisKind::Equitable).unwrap();
        let before = r.matrix(GenSym::Nz).unwrap().clone();
        r.perturb_generator(GenSym::Nz, 0, 1, Rat::one());
        let after = r.matrix(GenSym::Nz).unwrap();
        let diff = after.first_difference(&before).unwrap();
        assert_eq!((diff.0, diff.1), (0, 1));
        assert_eq!(diff.2, before.entry(0, 1) + &Rat::one());
    }
}
