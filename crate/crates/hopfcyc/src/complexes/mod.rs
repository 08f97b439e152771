//! Graded complexes and the chain-level maps between them.

use std::collections::BTreeMap;

use crate::exact::{SparseMatrix, SparseVec, Q};
use crate::hopf::HopfError;

pub mod cyclic;
pub mod goldens;
pub mod lie;
pub mod mixed;
pub mod wedge;
pub mod weight;
pub mod weil;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error("{0}")]
    Cap(#[from] HopfError),
    #[error("d∘d ≠ 0 in `{name}` at degree {degree}")]
    NotAComplex { name: String, degree: usize },
    #[error("image of `{0}` leaves the assembled basis")]
    OutOfBasis(String),
    #[error("filtration not respected: {0}")]
    Filtration(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

/// A finite cochain complex given by labelled bases and differential matrices.
/// `d[q]` maps degree q to q+1 (descending: q to q−1); column j is the image
/// of basis vector j.
#[derive(Debug, Clone)]
pub struct ComplexHandle {
    pub name: String,
    pub labels: Vec<Vec<String>>,
    pub d: Vec<SparseMatrix>,
    pub descending: bool,
}

impl ComplexHandle {
    /// Checks d∘d = 0 on every consecutive pair.
    pub fn new(name: &str, labels: Vec<Vec<String>>, d: Vec<SparseMatrix>, descending: bool) -> Result<Self, ComplexError> {
        let h = ComplexHandle { name: name.into(), labels, d, descending };
        for q in 0..h.labels.len() {
            let Some(t) = h.target(q) else { continue };
            let (Some(a), Some(b)) = (h.out_map(q), h.out_map(t)) else {
                continue;
            };
            if !b.mul(a).is_zero() {
                return Err(ComplexError::NotAComplex { name: name.into(), degree: q });
            }
        }
        Ok(h)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.labels.iter().map(|l| l.len()).collect()
    }

    fn target(&self, q: usize) -> Option<usize> {
        if self.descending {
            q.checked_sub(1)
        } else if q < self.labels.len() && q + 1 < self.labels.len() {
            Some(q + 1)
        } else {
            None
        }
    }

    /// The differential leaving degree q.
    pub fn out_map(&self, q: usize) -> Option<&SparseMatrix> {
        self.target(q)?;
        self.d.get(q)
    }

    /// The differential arriving in degree q.
    pub fn in_map(&self, q: usize) -> Option<&SparseMatrix> {
        let src = if self.descending { q + 1 } else { q.checked_sub(1)? };
        if src >= self.labels.len() {
            return None;
        }
        self.d.get(src)
    }
}

/// Z/2-graded complex with one mixed differential in each parity.
#[derive(Debug, Clone)]
pub struct PeriodicHandle {
    pub name: String,
    pub even_labels: Vec<String>,
    pub odd_labels: Vec<String>,
    /// Z-degree of each basis element, used by filtrations and E1.
    pub even_degrees: Vec<usize>,
    pub odd_degrees: Vec<usize>,
    /// even → odd
    pub d_even: SparseMatrix,
    /// odd → even
    pub d_odd: SparseMatrix,
}

impl PeriodicHandle {
    pub fn square_is_zero(&self) -> bool {
        self.d_odd.mul(&self.d_even).is_zero() && self.d_even.mul(&self.d_odd).is_zero()
    }
}

/// Matrix of a linear operator between enumerated bases, columns evaluated in
/// parallel when enabled.
pub fn matrix_of<K, F>(name: &str, src: &[K], dst: &BTreeMap<K, usize>, op: F) -> Result<SparseMatrix, ComplexError>
where
    K: Ord + Clone + Sync + Send,
    F: Fn(&K) -> BTreeMap<K, Q> + Sync + Send,
{
    let cols: Vec<Option<SparseVec>> = crate::par::map(src, |k| {
        let img = op(k);
        let mut col = SparseVec::new();
        for (key, c) in img {
            col.insert(*dst.get(&key)?, c);
        }
        Some(col)
    });
    let cols: Option<Vec<SparseVec>> = cols.into_iter().collect();
    let cols = cols.ok_or_else(|| ComplexError::OutOfBasis(name.into()))?;
    Ok(SparseMatrix::from_columns(dst.len(), &cols))
}

pub fn index_map<K: Ord + Clone>(keys: &[K]) -> BTreeMap<K, usize> {
    keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect()
}

/// Serialized cochain: (basis label, rational string) pairs.
pub fn serialize<K, F: Fn(&K) -> String>(el: &BTreeMap<K, Q>, label: F) -> Vec<(String, String)> {
    el.iter().map(|(k, c)| (label(k), c.to_string())).collect()
}
