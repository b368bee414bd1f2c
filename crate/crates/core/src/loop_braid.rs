//! Words in the loop braid group on `n` strands and their images in the
//! symmetric group.
//!
//! Generators are the leapfrog braidings `σ_i` and the loop exchanges
//! `ρ_i` (an involution), `1 ≤ i < n`. The presentation used is the usual
//! one: braid relations for the `σ_i`, Coxeter relations for the `ρ_i`,
//! far commutation between all generators, and the two mixed relations
//! `ρ_i ρ_{i+1} σ_i = σ_{i+1} ρ_i ρ_{i+1}` and
//! `σ_i σ_{i+1} ρ_i = ρ_{i+1} σ_i σ_{i+1}`.
//!
//! The permutation image sends both `σ_i` and `ρ_i` to `(i i+1)`. It is
//! far from faithful and is only used to check relations.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Sigma,
    Rho,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub kind: Kind,
    /// 1-based.
    pub index: usize,
    /// `+1` or `-1`; always `+1` for `ρ`.
    pub power: i8,
}

impl Letter {
    pub fn sigma(index: usize) -> Self {
        Letter { kind: Kind::Sigma, index, power: 1 }
    }

    pub fn sigma_inv(index: usize) -> Self {
        Letter { kind: Kind::Sigma, index, power: -1 }
    }

    pub fn rho(index: usize) -> Self {
        Letter { kind: Kind::Rho, index, power: 1 }
    }

    pub fn inverse(self) -> Self {
        match self.kind {
            Kind::Sigma => Letter { power: -self.power, ..self },
            Kind::Rho => self,
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.inverse() == other
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            Kind::Sigma => 's',
            Kind::Rho => 'r',
        };
        write!(f, "{c}{}", self.index)?;
        if self.power < 0 {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("bad token '{0}' (expected s<i>, s<i>^-1, r<i>)")]
    BadToken(String),
    #[error("generator index {index} out of range for {n} strands")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("words on {0} and {1} strands cannot be composed")]
    StrandMismatch(usize, usize),
    #[error("strand count must be at least 1")]
    NoStrands,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LoopBraidWord {
    pub n: usize,
    letters: Vec<Letter>,
}

impl LoopBraidWord {
    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self, BraidError> {
        if n == 0 {
            return Err(BraidError::NoStrands);
        }
        let letters: Vec<Letter> = letters
            .into_iter()
            .map(|l| if l.kind == Kind::Rho { Letter { power: 1, ..l } } else { l })
            .collect();
        if let Some(l) = letters.iter().find(|l| l.index == 0 || l.index >= n) {
            return Err(BraidError::IndexOutOfRange { index: l.index, n });
        }
        Ok(LoopBraidWord { n, letters })
    }

    pub fn empty(n: usize) -> Self {
        LoopBraidWord { n, letters: Vec::new() }
    }

    /// Whitespace-separated tokens such as `s1 s2^-1 r1`; `e` is the empty
    /// word.
    pub fn parse(n: usize, text: &str) -> Result<Self, BraidError> {
        let letters = text
            .split_whitespace()
            .filter(|t| *t != "e")
            .map(|t| t.parse::<Letter>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(n, letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        LoopBraidWord { n: self.n, letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// Free reduction scanning left to right.
    pub fn reduced(&self) -> Self {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match stack.last() {
                Some(&top) if top.cancels(l) => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        LoopBraidWord { n: self.n, letters: stack }
    }

    /// Free reduction scanning right to left.
    pub fn reduced_from_right(&self) -> Self {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in self.letters.iter().rev() {
            match stack.last() {
                Some(&top) if top.cancels(l) => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        stack.reverse();
        LoopBraidWord { n: self.n, letters: stack }
    }

    fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        LoopBraidWord { n: self.n, letters }
    }
}

impl FromStr for Letter {
    type Err = BraidError;
    fn from_str(tok: &str) -> Result<Self, BraidError> {
        let bad = || BraidError::BadToken(tok.to_string());
        let (kind, rest) = match tok.chars().next() {
            Some('s') => (Kind::Sigma, &tok[1..]),
            Some('r') => (Kind::Rho, &tok[1..]),
            _ => return Err(bad()),
        };
        let (idx, power) = match rest.split_once('^') {
            Some((i, "-1")) => (i, -1),
            Some((i, "1")) => (i, 1),
            Some(_) => return Err(bad()),
            None => (rest, 1),
        };
        let index = idx.parse().map_err(|_| bad())?;
        let power = if kind == Kind::Rho { 1 } else { power };
        Ok(Letter { kind, index, power })
    }
}

impl fmt::Display for LoopBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        let toks: Vec<String> = self.letters.iter().map(Letter::to_string).collect();
        f.write_str(&toks.join(" "))
    }
}

/// Concatenation followed by free reduction.
pub fn concat_reduce(w1: &LoopBraidWord, w2: &LoopBraidWord) -> Result<LoopBraidWord, BraidError> {
    if w1.n != w2.n {
        return Err(BraidError::StrandMismatch(w1.n, w2.n));
    }
    Ok(w1.concat(w2).reduced())
}

/// A permutation of `{1..n}`, stored 0-based: `images[k]` is where `k`
/// goes. Products compose right to left: `(p * q)(k) = p(q(k))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Transposition of the 1-based points `i` and `i + 1`.
    pub fn adjacent(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k]
    }

    pub fn compose(&self, q: &Permutation) -> Permutation {
        Permutation { images: q.images.iter().map(|&k| self.images[k]).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &k)| i == k)
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut any = false;
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            any = true;
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push((k + 1).to_string());
                k = self.images[k];
            }
            write!(f, "({})", cycle.join(" "))?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// An assignment of permutations to the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermPairRep {
    pub n: usize,
    pub sigma: Vec<Permutation>,
    pub rho: Vec<Permutation>,
}

impl PermPairRep {
    /// Both `σ_i` and `ρ_i` go to `(i i+1)`.
    pub fn symmetric(n: usize) -> Self {
        let gens: Vec<Permutation> = (1..n).map(|i| Permutation::adjacent(n, i)).collect();
        PermPairRep { n, sigma: gens.clone(), rho: gens }
    }

    fn letter(&self, l: Letter) -> Permutation {
        let p = match l.kind {
            Kind::Sigma => &self.sigma[l.index - 1],
            Kind::Rho => &self.rho[l.index - 1],
        };
        if l.power < 0 {
            let mut inv = vec![0; self.n];
            for (i, &k) in p.images.iter().enumerate() {
                inv[k] = i;
            }
            Permutation { images: inv }
        } else {
            p.clone()
        }
    }

    pub fn image(&self, w: &LoopBraidWord) -> Permutation {
        w.letters.iter().fold(Permutation::identity(self.n), |acc, &l| acc.compose(&self.letter(l)))
    }
}

pub fn to_permutations(w: &LoopBraidWord) -> Permutation {
    PermPairRep::symmetric(w.n).image(w)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: &'static str,
    pub instance: String,
    pub lhs: LoopBraidWord,
    pub rhs: LoopBraidWord,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub n: usize,
    pub checks: Vec<RelationCheck>,
    /// Relations that need more strands than available.
    pub skipped: Vec<&'static str>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.holds { "holds" } else { "FAILS" };
            writeln!(f, "{} [{}]: {} = {} {status}", c.name, c.instance, c.lhs, c.rhs)?;
        }
        for s in &self.skipped {
            writeln!(f, "{s}: skipped (needs more strands)")?;
        }
        Ok(())
    }
}

/// Checks every relation of the presentation in the permutation image.
pub fn check_relations(n: usize) -> RelationReport {
    check_relations_in(&PermPairRep::symmetric(n.max(1)))
}

pub fn check_relations_in(rep: &PermPairRep) -> RelationReport {
    use Letter as L;
    let n = rep.n;
    let gens = n.saturating_sub(1);
    let mut checks = Vec::new();
    let mut add = |name, instance: String, lhs: Vec<Letter>, rhs: Vec<Letter>| {
        let lhs = LoopBraidWord { n, letters: lhs };
        let rhs = LoopBraidWord { n, letters: rhs };
        let holds = rep.image(&lhs.concat(&rhs.inverse())).is_identity();
        checks.push(RelationCheck { name, instance, lhs, rhs, holds });
    };
    for i in 1..=gens {
        add("sigma.inverse", format!("i={i}"), vec![L::sigma(i), L::sigma_inv(i)], vec![]);
        add("rho.involution", format!("i={i}"), vec![L::rho(i), L::rho(i)], vec![]);
    }
    for i in 1..gens {
        let j = i + 1;
        let inst = format!("i={i}");
        add("sigma.braid", inst.clone(), vec![L::sigma(i), L::sigma(j), L::sigma(i)], vec![
            L::sigma(j),
            L::sigma(i),
            L::sigma(j),
        ]);
        add("rho.braid", inst.clone(), vec![L::rho(i), L::rho(j), L::rho(i)], vec![L::rho(j), L::rho(i), L::rho(j)]);
        add("mixed.rho-rho-sigma", inst.clone(), vec![L::rho(i), L::rho(j), L::sigma(i)], vec![
            L::sigma(j),
            L::rho(i),
            L::rho(j),
        ]);
        add("mixed.sigma-sigma-rho", inst, vec![L::sigma(i), L::sigma(j), L::rho(i)], vec![
            L::rho(j),
            L::sigma(i),
            L::sigma(j),
        ]);
    }
    for i in 1..=gens {
        for j in i + 2..=gens {
            let inst = format!("i={i},j={j}");
            add("sigma.far", inst.clone(), vec![L::sigma(i), L::sigma(j)], vec![L::sigma(j), L::sigma(i)]);
            add("rho.far", inst.clone(), vec![L::rho(i), L::rho(j)], vec![L::rho(j), L::rho(i)]);
            add("mixed.far", inst.clone(), vec![L::sigma(i), L::rho(j)], vec![L::rho(j), L::sigma(i)]);
            add("mixed.far", format!("i={j},j={i}"), vec![L::sigma(j), L::rho(i)], vec![L::rho(i), L::sigma(j)]);
        }
    }
    let mut skipped = Vec::new();
    if gens < 2 {
        skipped.extend(["sigma.braid", "rho.braid", "mixed.rho-rho-sigma", "mixed.sigma-sigma-rho"]);
    }
    if gens < 3 {
        skipped.extend(["sigma.far", "rho.far", "mixed.far"]);
    }
    RelationReport { n, checks, skipped }
}
