use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::matrix::{invert, LinearMap, Q};
use crate::term::{Atom, Obj};

/// A finite-dimensional algebra with a counit. Comultiplication is derived
/// from the pairing `g[i][j] = eps(e_i e_j)` when that pairing is
/// invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub basis: Vec<String>,
    /// `e_i e_j = Σ_k mult[i][j][k] e_k`
    pub mult: Vec<Vec<Vec<Q>>>,
    pub unit: Vec<Q>,
    pub counit: Vec<Q>,
    comult: Option<Vec<Vec<Vec<Q>>>>,
}

impl Algebra {
    pub fn new(basis: Vec<String>, mult: Vec<Vec<Vec<Q>>>, unit: Vec<Q>, counit: Vec<Q>) -> Self {
        let mut a = Algebra { basis, mult, unit, counit, comult: None };
        a.comult = a.derive_comult();
        a
    }

    /// Two-dimensional algebra `Q[x]/(x² - s)` with basis `1, x`.
    pub fn quadratic(s: i64, counit: [i64; 2]) -> Self {
        let z = Q::zero();
        let o = Q::one();
        let mult = vec![vec![vec![o, z], vec![z, o]], vec![vec![z, o], vec![Q::from_integer(s), z]]];
        Algebra::new(
            vec!["1".into(), "x".into()],
            mult,
            vec![o, z],
            counit.iter().map(|&c| Q::from_integer(c)).collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn pairing(&self) -> Vec<Vec<Q>> {
        let d = self.dim();
        (0..d)
            .map(|i| (0..d).map(|j| (0..d).map(|k| self.mult[i][j][k] * self.counit[k]).sum()).collect())
            .collect()
    }

    /// `Δ(e_i) = Σ_{a,b} ginv[a][b] e_a ⊗ (e_b e_i)`; indexed `[i][a][c]`.
    fn derive_comult(&self) -> Option<Vec<Vec<Vec<Q>>>> {
        let d = self.dim();
        if self.mult.len() != d || self.unit.len() != d || self.counit.len() != d {
            return None;
        }
        let ginv = invert(&self.pairing())?;
        Some(
            (0..d)
                .map(|i| {
                    (0..d)
                        .map(|a| (0..d).map(|c| (0..d).map(|b| ginv[a][b] * self.mult[b][i][c]).sum()).collect())
                        .collect()
                })
                .collect(),
        )
    }

    pub fn comult(&self) -> Option<&Vec<Vec<Vec<Q>>>> {
        self.comult.as_ref()
    }

    /// Product of two vectors.
    pub fn product(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let d = self.dim();
        let mut out = vec![Q::zero(); d];
        for (xi, row) in x.iter().zip(&self.mult) {
            for (yj, coeffs) in y.iter().zip(row) {
                let c = xi * yj;
                if c.is_zero() {
                    continue;
                }
                for (o, m) in out.iter_mut().zip(coeffs) {
                    *o += c * m;
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Q> {
        (0..self.dim()).map(|k| if k == i { Q::one() } else { Q::zero() }).collect()
    }

    pub(crate) fn mu_matrix(&self, atom: Atom) -> LinearMap {
        let d = self.dim();
        let x = Obj::Atom(atom);
        LinearMap::from_fn(d, d * d, Obj::tensor(x.clone(), x.clone()), x, |k, c| self.mult[c / d][c % d][k])
    }

    pub(crate) fn eta_matrix(&self, atom: Atom) -> LinearMap {
        LinearMap::from_fn(self.dim(), 1, Obj::Unit, Obj::Atom(atom), |k, _| self.unit[k])
    }

    pub(crate) fn epsilon_matrix(&self, atom: Atom) -> LinearMap {
        LinearMap::from_fn(1, self.dim(), Obj::Atom(atom), Obj::Unit, |_, k| self.counit[k])
    }

    pub(crate) fn delta_matrix(&self, atom: Atom) -> Option<LinearMap> {
        let d = self.dim();
        let cm = self.comult()?;
        let x = Obj::Atom(atom);
        Some(LinearMap::from_fn(d * d, d, x.clone(), Obj::tensor(x.clone(), x), |r, i| cm[i][r / d][r % d]))
    }
}

/// Interpretations of the open object `A` and the closed object `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusModel {
    pub name: String,
    pub open: Algebra,
    pub closed: Algebra,
}

impl FrobeniusModel {
    /// `Q[x]/(x²)` with `ε(1) = 0, ε(x) = 1` on both objects.
    pub fn khovanov() -> Self {
        let alg = Algebra::quadratic(0, [0, 1]);
        FrobeniusModel { name: "K".into(), open: alg.clone(), closed: alg }
    }

    /// `Q[x]/(x² - 1)` with `ε(1) = 0, ε(x) = 1` on both objects.
    pub fn lee() -> Self {
        let alg = Algebra::quadratic(1, [0, 1]);
        FrobeniusModel { name: "L".into(), open: alg.clone(), closed: alg }
    }

    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "K" | "khovanov" => Some(Self::khovanov()),
            "L" | "lee" => Some(Self::lee()),
            _ => None,
        }
    }

    pub fn algebra(&self, atom: Atom) -> &Algebra {
        match atom {
            Atom::A => &self.open,
            Atom::C => &self.closed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    Associativity,
    Unit,
    PairingInvertible,
    Counit,
    Coassociativity,
    FrobeniusRelation,
    SigmaNaturality,
}

impl Law {
    pub const ALL: [Law; 7] = [
        Law::Associativity,
        Law::Unit,
        Law::PairingInvertible,
        Law::Counit,
        Law::Coassociativity,
        Law::FrobeniusRelation,
        Law::SigmaNaturality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::Associativity => "associativity",
            Law::Unit => "unit",
            Law::PairingInvertible => "pairing",
            Law::Counit => "counit",
            Law::Coassociativity => "coassociativity",
            Law::FrobeniusRelation => "frobenius",
            Law::SigmaNaturality => "sigma-naturality",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawCheck {
    pub law: Law,
    pub atom: Atom,
    /// The first failing basis tuple, if any.
    pub witness: Option<String>,
}

impl LawCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub model: String,
    pub checks: Vec<LawCheck>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(LawCheck::passed)
    }

    pub fn law(&self, law: Law, atom: Atom) -> Option<&LawCheck> {
        self.checks.iter().find(|c| c.law == law && c.atom == atom)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "{} {}[{}]: pass", self.model, c.law.name(), c.atom)?,
                Some(w) => writeln!(f, "{} {}[{}]: FAIL at {w}", self.model, c.law.name(), c.atom)?,
            }
        }
        Ok(())
    }
}

fn tensor_vec(x: &[Q], y: &[Q]) -> Vec<Q> {
    x.iter().flat_map(|a| y.iter().map(move |b| *a * *b)).collect()
}

/// Coproduct of `e_i`, as a vector of length d².
fn coproduct(cm: &[Vec<Vec<Q>>], i: usize) -> Vec<Q> {
    cm[i].iter().flat_map(|row| row.iter().copied()).collect()
}

fn check_algebra(alg: &Algebra, atom: Atom) -> Vec<LawCheck> {
    let d = alg.dim();
    let e = |i| alg.basis_vector(i);
    let mut out = Vec::new();
    let mut push = |law, witness: Option<String>| out.push(LawCheck { law, atom, witness });

    let shape_ok = alg.mult.len() == d
        && alg.mult.iter().all(|r| r.len() == d && r.iter().all(|c| c.len() == d))
        && alg.unit.len() == d
        && alg.counit.len() == d;
    if !shape_ok {
        for law in Law::ALL {
            push(law, Some("tensor shapes do not match the basis".into()));
        }
        return out;
    }

    let mut w = None;
    'assoc: for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let l = alg.product(&alg.product(&e(i), &e(j)), &e(k));
                let r = alg.product(&e(i), &alg.product(&e(j), &e(k)));
                if l != r {
                    w = Some(format!("(i,j,k)=({i},{j},{k})"));
                    break 'assoc;
                }
            }
        }
    }
    push(Law::Associativity, w);

    let w = (0..d)
        .find(|&i| alg.product(&alg.unit, &e(i)) != e(i) || alg.product(&e(i), &alg.unit) != e(i))
        .map(|i| format!("i={i}"));
    push(Law::Unit, w);

    let Some(cm) = alg.comult() else {
        push(Law::PairingInvertible, Some("pairing matrix is singular".into()));
        for law in [Law::Counit, Law::Coassociativity, Law::FrobeniusRelation] {
            push(law, Some("no comultiplication".into()));
        }
        push(Law::SigmaNaturality, check_naturality(alg, atom));
        return out;
    };
    push(Law::PairingInvertible, None);

    let delta = |v: &[Q]| -> Vec<Q> {
        let mut acc = vec![Q::zero(); d * d];
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                for (slot, x) in acc.iter_mut().zip(coproduct(cm, i)) {
                    *slot += *c * x;
                }
            }
        }
        acc
    };

    let w = (0..d)
        .find(|&i| {
            let cp = coproduct(cm, i);
            let left: Vec<Q> = (0..d).map(|b| (0..d).map(|a| alg.counit[a] * cp[a * d + b]).sum()).collect();
            let right: Vec<Q> = (0..d).map(|a| (0..d).map(|b| alg.counit[b] * cp[a * d + b]).sum()).collect();
            left != e(i) || right != e(i)
        })
        .map(|i| format!("i={i}"));
    push(Law::Counit, w);

    let w = (0..d)
        .find(|&i| {
            let cp = coproduct(cm, i);
            let mut left = vec![Q::zero(); d * d * d];
            let mut right = vec![Q::zero(); d * d * d];
            for a in 0..d {
                for b in 0..d {
                    let c = cp[a * d + b];
                    if c.is_zero() {
                        continue;
                    }
                    for (slot, x) in left.iter_mut().zip(tensor_vec(&coproduct(cm, a), &e(b))) {
                        *slot += c * x;
                    }
                    for (slot, x) in right.iter_mut().zip(tensor_vec(&e(a), &coproduct(cm, b))) {
                        *slot += c * x;
                    }
                }
            }
            left != right
        })
        .map(|i| format!("i={i}"));
    push(Law::Coassociativity, w);

    let mut w = None;
    'frob: for i in 0..d {
        for j in 0..d {
            let lhs = delta(&alg.product(&e(i), &e(j)));
            // (μ⊗id)(e_i ⊗ Δ e_j) and (id⊗μ)(Δ e_i ⊗ e_j)
            let dj = coproduct(cm, j);
            let di = coproduct(cm, i);
            let mut mid = vec![Q::zero(); d * d];
            let mut other = vec![Q::zero(); d * d];
            for a in 0..d {
                for b in 0..d {
                    if !dj[a * d + b].is_zero() {
                        let v = tensor_vec(&alg.product(&e(i), &e(a)), &e(b));
                        for (slot, x) in mid.iter_mut().zip(v) {
                            *slot += dj[a * d + b] * x;
                        }
                    }
                    if !di[a * d + b].is_zero() {
                        let v = tensor_vec(&e(a), &alg.product(&e(b), &e(j)));
                        for (slot, x) in other.iter_mut().zip(v) {
                            *slot += di[a * d + b] * x;
                        }
                    }
                }
            }
            if lhs != mid || lhs != other {
                w = Some(format!("(i,j)=({i},{j})"));
                break 'frob;
            }
        }
    }
    push(Law::FrobeniusRelation, w);
    push(Law::SigmaNaturality, check_naturality(alg, atom));
    out
}

/// `σ ∘ (f⊗g) = (g⊗f) ∘ σ` for every pair of elementary d×d matrices.
fn check_naturality(alg: &Algebra, atom: Atom) -> Option<String> {
    let d = alg.dim();
    let x = Obj::Atom(atom);
    let xx = Obj::tensor(x.clone(), x.clone());
    let swap = LinearMap::swap(d, d, xx.clone(), xx);
    let elementary = |p: usize, q: usize| {
        LinearMap::from_fn(d, d, x.clone(), x.clone(), |r, c| if (r, c) == (p, q) { Q::one() } else { Q::zero() })
    };
    for p in 0..d * d {
        for q in 0..d * d {
            let f = elementary(p / d, p % d);
            let g = elementary(q / d, q % d);
            if !swap.compose(&f.kron(&g)).same_entries(&g.kron(&f).compose(&swap)) {
                return Some(format!("E{}{} (x) E{}{}", p / d, p % d, q / d, q % d));
            }
        }
    }
    None
}

/// Checks every law for both objects by exhaustive basis computations.
pub fn validate_model(m: &FrobeniusModel) -> ValidationReport {
    let mut checks = check_algebra(&m.open, Atom::A);
    checks.extend(check_algebra(&m.closed, Atom::C));
    ValidationReport { model: m.name.clone(), checks }
}

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("cannot read model file: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("bad rational '{0}'")]
    Rational(String),
    #[error("entry index {index} out of range for basis of size {dim}")]
    Index { index: usize, dim: usize },
    #[error("model '{name}' violates its laws:\n{report}")]
    Invalid { name: String, report: ValidationReport },
}

#[derive(Serialize, Deserialize)]
struct ModelFile {
    name: String,
    open: AlgebraFile,
    closed: Option<AlgebraFile>,
}

#[derive(Serialize, Deserialize)]
struct AlgebraFile {
    basis: Vec<String>,
    unit: Vec<String>,
    counit: Vec<String>,
    /// Unlisted products are zero.
    mult: Vec<MultEntry>,
}

#[derive(Serialize, Deserialize)]
struct MultEntry {
    i: usize,
    j: usize,
    k: usize,
    value: String,
}

fn rational(s: &str) -> Result<Q, ModelError> {
    s.trim().parse().map_err(|_| ModelError::Rational(s.to_string()))
}

impl AlgebraFile {
    fn build(&self) -> Result<Algebra, ModelError> {
        let d = self.basis.len();
        let mut mult = vec![vec![vec![Q::zero(); d]; d]; d];
        for e in &self.mult {
            for index in [e.i, e.j, e.k] {
                if index >= d {
                    return Err(ModelError::Index { index, dim: d });
                }
            }
            mult[e.i][e.j][e.k] = rational(&e.value)?;
        }
        let vec = |v: &[String]| v.iter().map(|s| rational(s)).collect::<Result<Vec<_>, _>>();
        Ok(Algebra::new(self.basis.clone(), mult, vec(&self.unit)?, vec(&self.counit)?))
    }

    fn from_algebra(a: &Algebra) -> Self {
        let d = a.dim();
        let mut mult = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if !a.mult[i][j][k].is_zero() {
                        mult.push(MultEntry { i, j, k, value: a.mult[i][j][k].to_string() });
                    }
                }
            }
        }
        let strs = |v: &[Q]| v.iter().map(Q::to_string).collect();
        AlgebraFile { basis: a.basis.clone(), unit: strs(&a.unit), counit: strs(&a.counit), mult }
    }
}

/// Reads a TOML model description and rejects it unless every law holds.
pub fn load_model(text: &str) -> Result<FrobeniusModel, ModelError> {
    let file: ModelFile = toml::from_str(text)?;
    let open = file.open.build()?;
    let closed = match &file.closed {
        Some(c) => c.build()?,
        None => open.clone(),
    };
    let model = FrobeniusModel { name: file.name, open, closed };
    let report = validate_model(&model);
    if !report.all_passed() {
        return Err(ModelError::Invalid { name: model.name, report });
    }
    Ok(model)
}

pub fn model_to_toml(m: &FrobeniusModel) -> String {
    let file = ModelFile {
        name: m.name.clone(),
        open: AlgebraFile::from_algebra(&m.open),
        closed: (m.closed != m.open).then(|| AlgebraFile::from_algebra(&m.closed)),
    };
    toml::to_string(&file).expect("model serializes")
}
