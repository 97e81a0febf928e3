//! Centralizers `C(r) = {X : (Ad_X ⊗ Ad_X)(r) = r}` and their explicit diagonal patterns.

use crate::error::Result;
use crate::lie::{LieModel, ModelKind, Tensor2};
use crate::linalg::Matrix;
use crate::rmatrix::AdmissibleTriple;
use crate::scalar::Scalar;

/// Exact test `(Ad_X ⊗ Ad_X)(r) = r`.
pub fn centralizer_member<T: Scalar>(model: &LieModel, x: &Matrix<T>, r: &Tensor2<T>) -> Result<bool> {
    Ok(model.adjoint_act(x, r)? == *r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlotConstraint {
    /// Any nonzero value.
    Free,
    /// `t = ±1`.
    Sign,
    /// `t_i = t_k⁻¹`.
    Reciprocal(usize),
}

/// Diagonal description of a centralizer.
///
/// For sl(n), `T = diag(t_1, …, t_n)` with `s_i = t_i / t_{i+1}` (`i < n`) and `s_n = t_n`;
/// each class lists s-indices forced equal (0-based, `s_{n}` is index `n − 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CentralizerPattern {
    Sl { n: usize, classes: Vec<Vec<usize>> },
    O { n: usize, slots: Vec<SlotConstraint> },
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    let mut c = i;
    while parent[c] != r {
        let next = parent[c];
        parent[c] = r;
        c = next;
    }
    r
}

/// Classes of s-indices identified by `s_i = s_j` whenever `τ(α_i) = α_j`.
pub fn sl_s_classes(n: usize, t: &AdmissibleTriple) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    for (&a, &b) in &t.tau {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        let root = find(&mut parent, i);
        match classes.iter_mut().find(|c| find(&mut parent.clone(), c[0]) == root) {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    classes
}

pub fn centralizer_pattern_sl(n: usize, t: &AdmissibleTriple) -> CentralizerPattern {
    CentralizerPattern::Sl { n, classes: sl_s_classes(n, t) }
}

/// `diag ∩ O(n)` for the Drinfeld–Jimbo r-matrix of o(n).
pub fn centralizer_pattern_o_dj(n: usize) -> CentralizerPattern {
    let slots = (0..n)
        .map(|i| {
            if 2 * i + 1 == n {
                SlotConstraint::Sign
            } else if i < n / 2 {
                SlotConstraint::Free
            } else {
                SlotConstraint::Reciprocal(n - 1 - i)
            }
        })
        .collect();
    CentralizerPattern::O { n, slots }
}

/// The D_m triple `α_{m−1} ↦ α_m` on o(2m): slots `m` and `m+1` are forced to `±1`.
pub fn centralizer_pattern_o_d_example(n: usize) -> CentralizerPattern {
    let m = n / 2;
    let CentralizerPattern::O { n, mut slots } = centralizer_pattern_o_dj(n) else { unreachable!() };
    slots[m - 1] = SlotConstraint::Sign;
    CentralizerPattern::O { n, slots }
}

impl CentralizerPattern {
    pub fn model_kind(&self) -> ModelKind {
        match self {
            CentralizerPattern::Sl { .. } => ModelKind::Sl,
            CentralizerPattern::O { .. } => ModelKind::O,
        }
    }

    /// Membership of `diag(entries)` in the pattern.
    pub fn contains<T: Scalar>(&self, entries: &[T]) -> bool {
        if entries.iter().any(|x| x.is_zero()) {
            return false;
        }
        match self {
            CentralizerPattern::Sl { n, classes } => {
                if entries.len() != *n {
                    return false;
                }
                let s: Vec<T> = (0..*n)
                    .map(|i| {
                        if i + 1 < *n {
                            entries[i].clone() * entries[i + 1].inverse().expect("nonzero")
                        } else {
                            entries[i].clone()
                        }
                    })
                    .collect();
                classes.iter().all(|c| c.iter().all(|&i| (s[i].clone() - s[c[0]].clone()).is_zero()))
            }
            CentralizerPattern::O { n, slots } => {
                if entries.len() != *n {
                    return false;
                }
                slots.iter().enumerate().all(|(i, c)| match c {
                    SlotConstraint::Free => true,
                    SlotConstraint::Sign => {
                        let sq = entries[i].clone() * entries[i].clone();
                        (sq - entries[i].one_like()).is_zero()
                            && self.reciprocal_ok(entries, i)
                    }
                    SlotConstraint::Reciprocal(k) => {
                        (entries[i].clone() * entries[*k].clone() - entries[i].one_like()).is_zero()
                    }
                })
            }
        }
    }

    fn reciprocal_ok<T: Scalar>(&self, entries: &[T], i: usize) -> bool {
        let n = entries.len();
        (entries[i].clone() * entries[n - 1 - i].clone() - entries[i].one_like()).is_zero()
    }
}
