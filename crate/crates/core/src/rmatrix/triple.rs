//! Admissible triples (Γ₁, Γ₂, τ): a nilpotent isometry between sets of simple roots.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{RootSystem, RootType};

/// Simple roots are 0-based indices; `α_{i+1}` in the usual numbering is index `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AdmissibleTriple {
    pub root_type: RootType,
    pub rank: usize,
    /// τ as a map Γ₁ → Γ₂.
    pub tau: BTreeMap<usize, usize>,
}

impl AdmissibleTriple {
    pub fn new(root_type: RootType, rank: usize, tau: impl IntoIterator<Item = (usize, usize)>) -> Self {
        AdmissibleTriple { root_type, rank, tau: tau.into_iter().collect() }
    }

    /// The empty triple, giving the Drinfeld–Jimbo r-matrix.
    pub fn empty(root_type: RootType, rank: usize) -> Self {
        Self::new(root_type, rank, [])
    }

    pub fn is_empty(&self) -> bool {
        self.tau.is_empty()
    }

    pub fn gamma1(&self) -> Vec<usize> {
        self.tau.keys().copied().collect()
    }

    pub fn gamma2(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.tau.values().copied().collect();
        g.sort_unstable();
        g
    }

    pub fn apply(&self, i: usize) -> Option<usize> {
        self.tau.get(&i).copied()
    }

    /// Extends τ additively to simple-root coefficient vectors supported on Γ₁.
    pub fn apply_coeffs(&self, coeffs: &[i64]) -> Option<Vec<i64>> {
        let mut out = vec![0; coeffs.len()];
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                out[self.apply(i)?] += c;
            }
        }
        Some(out)
    }

    pub fn root_system(&self) -> Result<RootSystem> {
        RootSystem::new(self.root_type, self.rank)
    }

    /// Human-readable violations; empty iff the triple is admissible.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        let rs = match self.root_system() {
            Ok(rs) => rs,
            Err(e) => return vec![e.to_string()],
        };
        for (&a, &b) in &self.tau {
            if a >= self.rank || b >= self.rank {
                out.push(format!("simple root index out of range in a{} -> a{}", a + 1, b + 1));
            }
        }
        if !out.is_empty() {
            return out;
        }
        let images: Vec<usize> = self.tau.values().copied().collect();
        for (k, x) in images.iter().enumerate() {
            if images[..k].contains(x) {
                out.push(format!("tau is not injective: a{} is hit twice", x + 1));
            }
        }
        for (&a, &ta) in &self.tau {
            for (&b, &tb) in &self.tau {
                if a <= b && rs.simple_inner(a, b) != rs.simple_inner(ta, tb) {
                    out.push(format!(
                        "tau is not an isometry on (a{}, a{}): {} != {}",
                        a + 1,
                        b + 1,
                        rs.simple_inner(a, b),
                        rs.simple_inner(ta, tb)
                    ));
                }
            }
        }
        for &a in self.tau.keys() {
            let mut cur = a;
            let mut steps = 0;
            while let Some(next) = self.apply(cur) {
                cur = next;
                steps += 1;
                if steps > self.rank {
                    out.push(format!("tau is not nilpotent: the orbit of a{} stays in gamma1", a + 1));
                    break;
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn label(&self) -> String {
        if self.tau.is_empty() {
            return "empty".into();
        }
        let parts: Vec<String> = self.tau.iter().map(|(a, b)| format!("a{}->a{}", a + 1, b + 1)).collect();
        parts.join(",")
    }
}

pub const MAX_ENUMERATION_RANK: usize = 6;

/// All admissible triples of a root system, the empty one first, ordered by |Γ₁| and then
/// lexicographically by (Γ₁, τ).
pub fn enumerate_triples(rs: &RootSystem) -> Result<Vec<AdmissibleTriple>> {
    let r = rs.rank;
    if r > MAX_ENUMERATION_RANK {
        return Err(Error::RankTooLarge(r));
    }
    let mut out = Vec::new();
    for size in 0..=r {
        for mask in 0u32..(1 << r) {
            if mask.count_ones() as usize != size {
                continue;
            }
            let gamma1: Vec<usize> = (0..r).filter(|i| mask & (1 << i) != 0).collect();
            let mut images = Vec::new();
            injections(&gamma1, r, &mut Vec::new(), &mut images);
            for img in images {
                let t = AdmissibleTriple::new(rs.root_type, r, gamma1.iter().copied().zip(img));
                if t.is_valid() {
                    out.push(t);
                }
            }
        }
    }
    out.sort_by(|a, b| {
        (a.tau.len(), a.tau.iter().collect::<Vec<_>>()).cmp(&(b.tau.len(), b.tau.iter().collect::<Vec<_>>()))
    });
    Ok(out)
}

fn injections(domain: &[usize], r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == domain.len() {
        out.push(cur.clone());
        return;
    }
    for t in 0..r {
        if !cur.contains(&t) {
            cur.push(t);
            injections(domain, r, cur, out);
            cur.pop();
        }
    }
}
