//! Finite binary relations: the objects, 1-morphisms and inclusion 2-morphisms
//! of `Rel` restricted to finite indexed sets.
//!
//! A [`Relation`] is a dense boolean matrix whose rows are packed into `u64`
//! words. Sets are compared structurally: two [`FiniteSet`]s are the same set
//! iff they carry the same ordered label list.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[derive(Debug)]
struct SetInner {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

/// An ordered finite set of uniquely labelled elements.
#[derive(Clone)]
pub struct FiniteSet(Arc<SetInner>);

impl FiniteSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(FiniteSet(Arc::new(SetInner { labels, index })))
    }

    /// Like [`FiniteSet::new`] but rejects the empty set.
    pub fn non_void<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let s = Self::new(labels)?;
        if s.is_empty() {
            return Err(Error::EmptySet("finite set".into()));
        }
        Ok(s)
    }

    pub fn len(&self) -> usize {
        self.0.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.index.get(label).copied()
    }

    pub fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }
}

impl PartialEq for FiniteSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.labels == other.0.labels
    }
}

impl Eq for FiniteSet {}

impl Hash for FiniteSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.labels.hash(state);
    }
}

impl fmt::Debug for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.labels.iter()).finish()
    }
}

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD).max(1)
}

/// A binary relation between two finite sets, stored as a row-packed
/// boolean matrix. Entry `(i, j)` is set iff element `i` of the source is
/// related to element `j` of the target.
#[derive(Clone)]
pub struct Relation {
    source: FiniteSet,
    target: FiniteSet,
    stride: usize,
    bits: Vec<u64>,
}

impl Relation {
    pub fn empty(source: &FiniteSet, target: &FiniteSet) -> Self {
        let stride = words_for(target.len());
        Relation {
            source: source.clone(),
            target: target.clone(),
            stride,
            bits: vec![0; stride * source.len()],
        }
    }

    /// The diagonal relation on `set`.
    pub fn identity(set: &FiniteSet) -> Self {
        let mut r = Self::empty(set, set);
        for i in 0..set.len() {
            r.insert(i, i);
        }
        r
    }

    pub fn full(source: &FiniteSet, target: &FiniteSet) -> Self {
        let mut r = Self::empty(source, target);
        for i in 0..source.len() {
            for j in 0..target.len() {
                r.insert(i, j);
            }
        }
        r
    }

    /// Builds a relation from index pairs. Panics if an index is out of range.
    pub fn from_pairs<I>(source: &FiniteSet, target: &FiniteSet, pairs: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut r = Self::empty(source, target);
        for (i, j) in pairs {
            assert!(i < source.len() && j < target.len(), "pair ({i}, {j}) out of range");
            r.insert(i, j);
        }
        r
    }

    pub fn from_labels<A, B>(source: &FiniteSet, target: &FiniteSet, pairs: &[(A, B)]) -> Result<Self>
    where
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut r = Self::empty(source, target);
        for (a, b) in pairs {
            let i = source.require(a.as_ref())?;
            let j = target.require(b.as_ref())?;
            r.insert(i, j);
        }
        Ok(r)
    }

    /// The graph of a function given as `f(i)` for every source index.
    pub fn from_fn(source: &FiniteSet, target: &FiniteSet, f: impl Fn(usize) -> usize) -> Self {
        Self::from_pairs(source, target, (0..source.len()).map(|i| (i, f(i))))
    }

    pub fn source(&self) -> &FiniteSet {
        &self.source
    }

    pub fn target(&self) -> &FiniteSet {
        &self.target
    }

    pub(crate) fn insert(&mut self, i: usize, j: usize) {
        self.bits[i * self.stride + j / WORD] |= 1u64 << (j % WORD);
    }

    pub(crate) fn remove(&mut self, i: usize, j: usize) {
        self.bits[i * self.stride + j / WORD] &= !(1u64 << (j % WORD));
    }

    /// Returns a copy with `(i, j)` added.
    pub fn with(&self, i: usize, j: usize) -> Self {
        let mut r = self.clone();
        r.insert(i, j);
        r
    }

    /// Returns a copy with `(i, j)` removed.
    pub fn without(&self, i: usize, j: usize) -> Self {
        let mut r = self.clone();
        r.remove(i, j);
        r
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.stride + j / WORD] >> (j % WORD) & 1 == 1
    }

    pub fn relates(&self, a: &str, b: &str) -> Result<bool> {
        Ok(self.contains(self.source.require(a)?, self.target.require(b)?))
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.stride..(i + 1) * self.stride]
    }

    fn row_ones(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Target indices related to source index `i`, in index order.
    pub fn image_of(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i).iter().enumerate().flat_map(|(w, &bits)| {
            (0..WORD).filter(move |b| bits >> b & 1 == 1).map(move |b| w * WORD + b)
        })
    }

    /// Labels of all `y` with `x R y`, in index order.
    pub fn image(&self, x: &str) -> Result<Vec<&str>> {
        let i = self.source.require(x)?;
        Ok(self.image_of(i).map(|j| self.target.label(j)).collect())
    }

    /// All related index pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.source.len()).flat_map(move |i| self.image_of(i).map(move |j| (i, j)))
    }

    pub fn count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Raw packed matrix, used as a hash key by the monoid closure.
    pub fn bits(&self) -> &[u64] {
        &self.bits
    }

    fn check_same_endpoints(&self, other: &Relation, op: &str) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::SetMismatch(format!(
                "{op}: relations have different source/target sets"
            )));
        }
        Ok(())
    }

    /// `self` followed by `next`: `x (self ; next) z` iff some `y` has
    /// `x self y` and `y next z`. In the usual notation this is `next ∘ self`.
    pub fn compose(&self, next: &Relation) -> Result<Relation> {
        if self.target != next.source {
            return Err(Error::SetMismatch(
                "compose: target of the first relation is not the source of the second".into(),
            ));
        }
        let mut out = Relation::empty(&self.source, &next.target);
        let stride = out.stride;
        for i in 0..self.source.len() {
            let dst = &mut out.bits[i * stride..(i + 1) * stride];
            for j in self.image_of(i) {
                for (d, s) in dst.iter_mut().zip(next.row(j)) {
                    *d |= *s;
                }
            }
        }
        Ok(out)
    }

    /// Inclusion as a 2-morphism: every pair of `self` is a pair of `outer`.
    pub fn included_in(&self, outer: &Relation) -> Result<bool> {
        self.check_same_endpoints(outer, "includes")?;
        Ok(self.bits.iter().zip(&outer.bits).all(|(a, b)| a & !b == 0))
    }

    /// First pair of `self` missing from `outer`, if any.
    pub fn first_excess(&self, outer: &Relation) -> Result<Option<(usize, usize)>> {
        self.check_same_endpoints(outer, "includes")?;
        Ok(self.pairs().find(|&(i, j)| !outer.contains(i, j)))
    }

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        self.check_same_endpoints(other, "union")?;
        let mut out = self.clone();
        for (a, b) in out.bits.iter_mut().zip(&other.bits) {
            *a |= *b;
        }
        Ok(out)
    }

    pub fn intersection(&self, other: &Relation) -> Result<Relation> {
        self.check_same_endpoints(other, "intersection")?;
        let mut out = self.clone();
        for (a, b) in out.bits.iter_mut().zip(&other.bits) {
            *a &= *b;
        }
        Ok(out)
    }

    /// Entrywise `self \ other`.
    pub fn difference(&self, other: &Relation) -> Result<Relation> {
        self.check_same_endpoints(other, "difference")?;
        let mut out = self.clone();
        for (a, b) in out.bits.iter_mut().zip(&other.bits) {
            *a &= !*b;
        }
        Ok(out)
    }

    /// Transpose.
    pub fn converse(&self) -> Relation {
        let mut out = Relation::empty(&self.target, &self.source);
        for (i, j) in self.pairs() {
            out.insert(j, i);
        }
        out
    }

    pub fn is_left_total(&self) -> bool {
        (0..self.source.len()).all(|i| self.row(i).iter().any(|&w| w != 0))
    }

    pub fn is_function(&self) -> bool {
        (0..self.source.len()).all(|i| self.row_ones(i) == 1)
    }

    pub fn is_bijection(&self) -> bool {
        self.is_function() && {
            let mut hits = vec![0usize; self.target.len()];
            for (_, j) in self.pairs() {
                hits[j] += 1;
            }
            hits.iter().all(|&h| h == 1)
        }
    }

    /// The value at `i` when `self` is a function there.
    pub fn apply(&self, i: usize) -> Option<usize> {
        let mut it = self.image_of(i);
        match (it.next(), it.next()) {
            (Some(j), None) => Some(j),
            _ => None,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.source == self.target && self.converse() == *self
    }
}

impl PartialEq for Relation {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.bits == other.bits
    }
}

impl Eq for Relation {}

impl Hash for Relation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.source.hash(state);
        self.target.hash(state);
        self.bits.hash(state);
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(
                self.pairs()
                    .map(|(i, j)| format!("{}->{}", self.source.label(i), self.target.label(j))),
            )
            .finish()
    }
}
