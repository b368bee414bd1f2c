//! Bigraded rank tables and the filtered Poincaré polynomial of a tangle.
//!
//! A state `|r,k⟩` is an eigenvector of the homological degree operator
//! `F` (eigenvalue `r`), the filtration operator `P` (eigenvalue `k`) and
//! the rank operator `M`, so `U = t^F A^P M` acts by the monomial
//! `rank · t^r · A^k`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use thiserror::Error;

/// Integer Laurent polynomial in commuting `t` and `A`, keyed by
/// `(t exponent, A exponent)`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, i64), i64>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        LaurentPoly2::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(coeff: i64, t: i64, a: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(coeff, t, a);
        p
    }

    pub fn add_term(&mut self, coeff: i64, t: i64, a: i64) {
        let slot = self.terms.entry((t, a)).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&(t, a));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, t: i64, a: i64) -> i64 {
        self.terms.get(&(t, a)).copied().unwrap_or(0)
    }

    /// `(t exponent, A exponent, coefficient)` in ascending order.
    pub fn triples(&self) -> Vec<(i64, i64, i64)> {
        self.terms.iter().map(|(&(t, a), &c)| (t, a, c)).collect()
    }

    pub fn from_triples(triples: impl IntoIterator<Item = (i64, i64, i64)>) -> Self {
        let mut p = Self::zero();
        for (t, a, c) in triples {
            p.add_term(c, t, a);
        }
        p
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self + &rhs
    }
}

impl AddAssign<&LaurentPoly2> for LaurentPoly2 {
    fn add_assign(&mut self, rhs: &LaurentPoly2) {
        for (&(t, a), &c) in &rhs.terms {
            self.add_term(c, t, a);
        }
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2 { terms: self.terms.iter().map(|(&k, &c)| (k, -c)).collect() }
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (&(t1, a1), &c1) in &self.terms {
            for (&(t2, a2), &c2) in &rhs.terms {
                out.add_term(c1 * c2, t1 + t2, a1 + a2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: LaurentPoly2) -> LaurentPoly2 {
        &self * &rhs
    }
}

fn power(var: &str, e: i64) -> Option<String> {
    match e {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{e}")),
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&(t, a), &c)) in self.terms.iter().enumerate() {
            let sign = match (i, c < 0) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let mut factors: Vec<String> = power("t", t).into_iter().chain(power("A", a)).collect();
            if factors.is_empty() || c.abs() != 1 {
                factors.insert(0, c.abs().to_string());
            }
            write!(f, "{sign}{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyState {
    /// Homological degree.
    pub r: i64,
    /// Filtration degree.
    pub k: i64,
    pub rank: u64,
    pub label: Option<String>,
}

impl HomologyState {
    pub fn new(r: i64, k: i64, rank: u64) -> Self {
        HomologyState { r, k, rank, label: None }
    }

    pub fn labelled(mut self, label: &str) -> Self {
        self.label = Some(label.to_string());
        self
    }
}

/// The action of `t^F`.
pub fn t_pow_f(s: &HomologyState) -> LaurentPoly2 {
    LaurentPoly2::monomial(1, s.r, 0)
}

/// The action of `A^P`.
pub fn a_pow_p(s: &HomologyState) -> LaurentPoly2 {
    LaurentPoly2::monomial(1, 0, s.k)
}

/// The action of `M`.
pub fn m_op(s: &HomologyState) -> LaurentPoly2 {
    LaurentPoly2::monomial(s.rank as i64, 0, 0)
}

/// `U = t^F A^P M` on an eigenstate: the eigenvalue and the unchanged
/// state.
#[allow(non_snake_case)]
pub fn apply_U(s: &HomologyState) -> (LaurentPoly2, HomologyState) {
    (&(&t_pow_f(s) * &a_pow_p(s)) * &m_op(s), s.clone())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("state (r={r}, k={k}) appears twice")]
    Duplicate { r: i64, k: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTable {
    pub name: String,
    pub states: Vec<HomologyState>,
}

impl RankTable {
    pub fn new(name: &str, states: Vec<HomologyState>) -> Result<Self, TableError> {
        let table = RankTable { name: name.to_string(), states };
        table.validate()?;
        Ok(table)
    }

    pub fn validate(&self) -> Result<(), TableError> {
        let mut seen = std::collections::HashSet::new();
        for s in &self.states {
            if !seen.insert((s.r, s.k)) {
                return Err(TableError::Duplicate { r: s.r, k: s.k });
            }
        }
        Ok(())
    }

    pub fn state(&self, r: i64, k: i64) -> Option<&HomologyState> {
        self.states.iter().find(|s| s.r == r && s.k == k)
    }

    /// One state per line, `r k rank [label]`; `#` starts a comment.
    pub fn parse(name: &str, text: &str) -> Result<Self, TableError> {
        let mut states = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| TableError::Syntax { line: n + 1, message };
            let mut parts = line.split_whitespace();
            let mut num = |what: &str| -> Result<i64, TableError> {
                let p = parts.next().ok_or_else(|| err(format!("missing {what}")))?;
                p.parse().map_err(|_| err(format!("bad {what} '{p}'")))
            };
            let r = num("r")?;
            let k = num("k")?;
            let rank = num("rank")?;
            if rank < 0 {
                return Err(err(format!("negative rank {rank}")));
            }
            let label = line.split_whitespace().skip(3).collect::<Vec<_>>().join(" ");
            let mut s = HomologyState::new(r, k, rank as u64);
            if !label.is_empty() {
                s.label = Some(label);
            }
            states.push(s);
        }
        Self::new(name, states)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("# {}\n", self.name);
        for s in &self.states {
            out.push_str(&format!("{} {} {}", s.r, s.k, s.rank));
            if let Some(l) = &s.label {
                out.push_str(&format!(" {l}"));
            }
            out.push('\n');
        }
        out
    }
}

/// `Σ rank · t^r · A^k`, summed directly from the table.
pub fn tangle_polynomial(table: &RankTable) -> LaurentPoly2 {
    let mut p = LaurentPoly2::zero();
    for s in &table.states {
        p.add_term(s.rank as i64, s.r, s.k);
    }
    p
}

/// `Σ ⟨s|U|s⟩` over the table's eigenstates.
pub fn expectation_sum(table: &RankTable) -> LaurentPoly2 {
    table.states.iter().fold(LaurentPoly2::zero(), |acc, s| acc + apply_U(s).0)
}

pub fn bar_natan_table() -> RankTable {
    RankTable::new(
        "barnatan",
        vec![
            HomologyState::new(0, 2, 1).labelled("1⊗y + y⊗y"),
            HomologyState::new(0, 4, 1).labelled("1⊗y + y⊗1"),
            HomologyState::new(2, 8, 1).labelled("1⊗x⊗1"),
            HomologyState::new(2, 12, 1).labelled("1⊗1⊗1"),
        ],
    )
    .expect("built-in table is valid")
}

pub fn khovanov_table() -> RankTable {
    RankTable::new(
        "khovanov",
        vec![
            HomologyState::new(0, 2, 1).labelled("y⊗y"),
            HomologyState::new(0, 4, 1).labelled("1⊗y + y⊗1"),
            HomologyState::new(1, 6, 1).labelled("(1⊗y; 1⊗y)"),
            HomologyState::new(1, 8, 1).labelled("(1⊗1; 1⊗1)"),
            HomologyState::new(2, 8, 1).labelled("y⊗1⊗y"),
            HomologyState::new(2, 10, 2).labelled("1⊗1⊗y, y⊗1⊗1"),
            HomologyState::new(2, 12, 1).labelled("1⊗1⊗1"),
        ],
    )
    .expect("built-in table is valid")
}

pub fn builtin_table(name: &str) -> Option<RankTable> {
    match name {
        "barnatan" | "bar-natan" => Some(bar_natan_table()),
        "khovanov" => Some(khovanov_table()),
        _ => None,
    }
}
