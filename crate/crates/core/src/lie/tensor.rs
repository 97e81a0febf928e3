//! Sparse tensors in g⊗g and g⊗g⊗g over a fixed basis; zero entries are never stored.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct Tensor2<T> {
    entries: BTreeMap<(usize, usize), T>,
}

#[derive(Clone, Debug)]
pub struct Tensor3<T> {
    entries: BTreeMap<(usize, usize, usize), T>,
}

impl<T> Default for Tensor2<T> {
    fn default() -> Self {
        Tensor2 { entries: BTreeMap::new() }
    }
}

impl<T> Default for Tensor3<T> {
    fn default() -> Self {
        Tensor3 { entries: BTreeMap::new() }
    }
}

impl<T: Scalar> Tensor2<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, usize, T)>) -> Self {
        let mut t = Self::new();
        for (i, j, v) in terms {
            t.add_term(i, j, v);
        }
        t
    }

    /// Adds `v · x_i ⊗ x_j`.
    pub fn add_term(&mut self, i: usize, j: usize, v: T) {
        if v.is_zero() {
            return;
        }
        match self.entries.remove(&(i, j)) {
            Some(old) => {
                let s = old + v;
                if !s.is_zero() {
                    self.entries.insert((i, j), s);
                }
            }
            None => {
                self.entries.insert((i, j), v);
            }
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&T> {
        self.entries.get(&(i, j))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Some stored entry, used to embed constants in the same scalar domain.
    pub fn proto(&self) -> Option<&T> {
        self.entries.values().next()
    }

    /// `t²¹`: swaps the legs.
    pub fn flip(&self) -> Self {
        Tensor2 { entries: self.entries.iter().map(|(&(i, j), v)| ((j, i), v.clone())).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, j, v) in other.iter() {
            out.add_term(i, j, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, j, v) in other.iter() {
            out.add_term(i, j, -v.clone());
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_terms(self.iter().map(|(i, j, v)| (i, j, c.clone() * v.clone())))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Tensor2<U> {
        Tensor2::from_terms(self.iter().map(|(i, j, v)| (i, j, f(v))))
    }

    pub fn sigma2(&self) -> Self {
        self.map(|v| v.sigma2())
    }

    /// Restricts to the entries whose indices both satisfy `keep`.
    pub fn filter(&self, keep: impl Fn(usize) -> bool) -> Self {
        Self::from_terms(self.iter().filter(|(i, j, _)| keep(*i) && keep(*j)).map(|(i, j, v)| (i, j, v.clone())))
    }
}

/// `x ∧ y = x⊗y − y⊗x` for basis elements, scaled by `c`.
pub fn wedge_terms<T: Scalar>(i: usize, j: usize, c: T) -> [(usize, usize, T); 2] {
    [(i, j, c.clone()), (j, i, -c)]
}

impl<T: Scalar> PartialEq for Tensor2<T> {
    /// Equal when the difference vanishes at the working precision.
    fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_empty()
    }
}

impl<T: Scalar> Tensor3<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, i: usize, j: usize, k: usize, v: T) {
        if v.is_zero() {
            return;
        }
        match self.entries.remove(&(i, j, k)) {
            Some(old) => {
                let s = old + v;
                if !s.is_zero() {
                    self.entries.insert((i, j, k), s);
                }
            }
            None => {
                self.entries.insert((i, j, k), v);
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, usize, &T)> {
        self.entries.iter().map(|(&(i, j, k), v)| (i, j, k, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl<T: fmt::Display> fmt::Display for Tensor2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|(&(i, j), v)| format!("[{i}, {j}, {v}]")).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl<T: fmt::Display> fmt::Display for Tensor3<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.entries.iter().map(|(&(i, j, k), v)| format!("[{i}, {j}, {k}, {v}]")).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussRat;

    #[test]
    fn cancellation_drops_entries() {
        let mut t = Tensor2::new();
        t.add_term(0, 1, GaussRat::from_int(2));
        t.add_term(0, 1, GaussRat::from_int(-2));
        assert!(t.is_empty());
        let w = Tensor2::from_terms(wedge_terms(0, 1, GaussRat::one()));
        assert_eq!(w.flip(), Tensor2::from_terms(wedge_terms(1, 0, GaussRat::one())));
        assert!(w.add(&w.flip()).is_empty());
    }
}
