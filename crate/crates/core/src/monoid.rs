//! Monoids of relations: breadth-first closure of a generator set under
//! composition, canonical words, Cayley graphs, relator checks, units,
//! automorphisms and table isomorphism.
//!
//! Word convention: the word `UP` means "relate by `U`, then by `P`", i.e.
//! `compose(U, P)` in [`Relation::compose`] terms. Multiplication tables use
//! the same left-to-right order: `table.get(a, b)` is the element of
//! `word(a) word(b)`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::dot::DotWriter;
use crate::error::{Error, Result};
use crate::relcore::{FiniteSet, Relation};

/// Named endo-relations on a common carrier.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    carrier: FiniteSet,
    names: Vec<char>,
    relations: Vec<Relation>,
}

impl GeneratorSet {
    /// Generator names must be single alphabetic characters other than `e`
    /// (reserved for the identity) and pairwise distinct.
    pub fn new<S: AsRef<str>>(carrier: FiniteSet, gens: Vec<(S, Relation)>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::Domain("a generator set needs at least one generator".into()));
        }
        let mut names = Vec::with_capacity(gens.len());
        let mut relations = Vec::with_capacity(gens.len());
        for (name, rel) in gens {
            let name = name.as_ref();
            let mut cs = name.chars();
            let c = match (cs.next(), cs.next()) {
                (Some(c), None) if c.is_ascii_alphabetic() && c != 'e' => c,
                _ => {
                    return Err(Error::Domain(format!(
                        "generator name `{name}` must be a single letter other than `e`"
                    )))
                }
            };
            if names.contains(&c) {
                return Err(Error::DuplicateLabel(name.to_string()));
            }
            if rel.source() != &carrier || rel.target() != &carrier {
                return Err(Error::SetMismatch(format!(
                    "generator `{name}` is not an endo-relation on the carrier"
                )));
            }
            names.push(c);
            relations.push(rel);
        }
        Ok(GeneratorSet { carrier, names, relations })
    }

    pub fn carrier(&self) -> &FiniteSet {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, g: usize) -> char {
        self.names[g]
    }

    pub fn relation(&self, g: usize) -> &Relation {
        &self.relations[g]
    }

    pub fn position(&self, name: char) -> Option<usize> {
        self.names.iter().position(|&c| c == name)
    }

    /// Parses words such as `UPL`, `U^2PU^2`, `(UP)^2U^2`, `ST^2` or `e`.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        WordParser { gens: self, input: text, chars: text.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 }
            .parse()
    }

    /// Folds `compose` over the letters starting from the identity.
    pub fn evaluate_word(&self, w: &Word) -> Relation {
        w.0.iter().fold(Relation::identity(&self.carrier), |acc, &g| {
            acc.compose(&self.relations[g]).expect("endo-relations")
        })
    }

    pub fn evaluate(&self, text: &str) -> Result<Relation> {
        Ok(self.evaluate_word(&self.parse_word(text)?))
    }

    pub fn render(&self, w: &Word) -> String {
        w.render(&self.names)
    }
}

struct WordParser<'a> {
    gens: &'a GeneratorSet,
    input: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl WordParser<'_> {
    fn fail(&self, reason: impl Into<String>) -> Error {
        Error::WordParse { input: self.input.to_string(), reason: reason.into() }
    }

    fn parse(mut self) -> Result<Word> {
        let w = self.sequence()?;
        if self.pos < self.chars.len() {
            return Err(self.fail(format!("unexpected `{}`", self.chars[self.pos])));
        }
        Ok(w)
    }

    fn sequence(&mut self) -> Result<Word> {
        let mut out = Vec::new();
        while let Some(&c) = self.chars.get(self.pos) {
            if c == ')' {
                break;
            }
            let atom = self.atom()?;
            let power = self.exponent()?;
            for _ in 0..power {
                out.extend_from_slice(&atom);
            }
        }
        Ok(Word(out))
    }

    fn atom(&mut self) -> Result<Vec<usize>> {
        let c = self.chars[self.pos];
        self.pos += 1;
        match c {
            '(' => {
                let inner = self.sequence()?;
                if self.chars.get(self.pos) != Some(&')') {
                    return Err(self.fail("unbalanced parenthesis"));
                }
                self.pos += 1;
                Ok(inner.0)
            }
            'e' => Ok(Vec::new()),
            c if c.is_ascii_alphabetic() => self
                .gens
                .position(c)
                .map(|g| vec![g])
                .ok_or_else(|| Error::UnknownGenerator(c.to_string())),
            other => Err(self.fail(format!("unexpected `{other}`"))),
        }
    }

    fn exponent(&mut self) -> Result<usize> {
        if self.chars.get(self.pos) != Some(&'^') {
            return Ok(1);
        }
        self.pos += 1;
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| self.fail("exponent must be a non-negative integer"))
    }
}

/// A sequence of generator indices; the empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Caret notation for runs: `[S, T, T]` renders as `ST^2`.
    pub fn render(&self, names: &[char]) -> String {
        if self.0.is_empty() {
            return "e".to_string();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < self.0.len() {
            let g = self.0[i];
            let run = self.0[i..].iter().take_while(|&&h| h == g).count();
            out.push(names[g]);
            if run > 1 {
                out.push_str(&format!("^{run}"));
            }
            i += run;
        }
        out
    }
}

/// A finite multiplication table; `get(a, b)` is the product "a then b".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MulTable {
    n: usize,
    data: Vec<usize>,
}

impl MulTable {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let c = f(a, b);
                assert!(c < n, "product out of range");
                data.push(c);
            }
        }
        MulTable { n, data }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, a: usize, b: usize) -> usize {
        self.data[a * self.n + b]
    }

    pub fn identity(&self) -> Option<usize> {
        (0..self.n).find(|&e| (0..self.n).all(|x| self.get(e, x) == x && self.get(x, e) == x))
    }

    pub fn is_associative(&self) -> bool {
        (0..self.n).all(|a| {
            (0..self.n).all(|b| {
                let ab = self.get(a, b);
                (0..self.n).all(|c| self.get(ab, c) == self.get(a, self.get(b, c)))
            })
        })
    }

    /// Cyclic group of order `n`.
    pub fn cyclic(n: usize) -> Self {
        Self::from_fn(n, |a, b| (a + b) % n)
    }

    /// Dihedral group with `order` elements (`order` even): rotations `r^k`
    /// are `0..order/2`, reflections `s r^k` are `order/2..order`.
    pub fn dihedral(order: usize) -> Self {
        assert!(order >= 2 && order.is_multiple_of(2), "dihedral order must be even");
        let k = order / 2;
        // element (f, r) stands for s^f r^r; r s = s r^-1
        Self::from_fn(order, |a, b| {
            let (fa, ra) = (a / k, a % k);
            let (fb, rb) = (b / k, b % k);
            let r = if fb == 1 { (k - ra + rb) % k } else { (ra + rb) % k };
            ((fa + fb) % 2) * k + r
        })
    }

    pub fn klein4() -> Self {
        Self::from_fn(4, |a, b| a ^ b)
    }

    pub fn direct_product(&self, other: &MulTable) -> Self {
        let m = other.n;
        Self::from_fn(self.n * m, |a, b| self.get(a / m, b / m) * m + other.get(a % m, b % m))
    }

    /// `(index, period)` of the power sequence `x, x^2, ...`.
    fn cyclic_signature(&self, x: usize) -> (usize, usize) {
        let mut seen = HashMap::new();
        let mut cur = x;
        let mut k = 1;
        loop {
            if let Some(&first) = seen.get(&cur) {
                return (first, k - first);
            }
            seen.insert(cur, k);
            cur = self.get(cur, x);
            k += 1;
        }
    }

    fn closure(&self, identity: Option<usize>, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        for &s in identity.iter().chain(gens) {
            if !seen[s] {
                seen[s] = true;
                order.push(s);
                queue.push_back(s);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.get(x, g);
                if !seen[y] {
                    seen[y] = true;
                    order.push(y);
                    queue.push_back(y);
                }
            }
        }
        order
    }
}

/// Searches for an isomorphism `a -> b` of multiplication tables by
/// backtracking over images of a generating set of `a`. Returns the element
/// map as witness.
pub fn isomorphic_tables(a: &MulTable, b: &MulTable) -> Option<Vec<usize>> {
    if a.n != b.n {
        return None;
    }
    let (ida, idb) = (a.identity(), b.identity());
    if ida.is_some() != idb.is_some() {
        return None;
    }
    // greedy generating set, preferring elements with large cyclic closure
    let mut gens: Vec<usize> = Vec::new();
    let mut covered = a.closure(ida, &gens);
    while covered.len() < a.n {
        let covered_set: HashSet<usize> = covered.iter().copied().collect();
        let next = (0..a.n)
            .filter(|x| !covered_set.contains(x))
            .max_by_key(|&x| {
                let (i, p) = a.cyclic_signature(x);
                (i + p, std::cmp::Reverse(x))
            })
            .expect("uncovered element");
        gens.push(next);
        covered = a.closure(ida, &gens);
    }
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let sig = a.cyclic_signature(g);
            (0..b.n).filter(|&y| b.cyclic_signature(y) == sig).collect()
        })
        .collect();
    let mut images = vec![0; gens.len()];
    search_images(a, b, ida, idb, &gens, &candidates, &mut images, 0)
}

#[allow(clippy::too_many_arguments)]
fn search_images(
    a: &MulTable,
    b: &MulTable,
    ida: Option<usize>,
    idb: Option<usize>,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    depth: usize,
) -> Option<Vec<usize>> {
    if depth == gens.len() {
        return try_extend(a, b, ida, idb, gens, images);
    }
    for &c in &candidates[depth] {
        images[depth] = c;
        if let Some(w) = search_images(a, b, ida, idb, gens, candidates, images, depth + 1) {
            return Some(w);
        }
    }
    None
}

fn try_extend(
    a: &MulTable,
    b: &MulTable,
    ida: Option<usize>,
    idb: Option<usize>,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    const UNSET: usize = usize::MAX;
    let mut map = vec![UNSET; a.n];
    let mut used = vec![false; b.n];
    let mut queue = VecDeque::new();
    let mut assign = |x: usize, y: usize, map: &mut Vec<usize>, queue: &mut VecDeque<usize>| -> bool {
        if map[x] == UNSET {
            if used[y] {
                return false;
            }
            used[y] = true;
            map[x] = y;
            queue.push_back(x);
            true
        } else {
            map[x] == y
        }
    };
    if let (Some(ea), Some(eb)) = (ida, idb) {
        if !assign(ea, eb, &mut map, &mut queue) {
            return None;
        }
    }
    for (&g, &img) in gens.iter().zip(images) {
        if !assign(g, img, &mut map, &mut queue) {
            return None;
        }
    }
    while let Some(x) = queue.pop_front() {
        for (&g, &img) in gens.iter().zip(images) {
            let y = a.get(x, g);
            let target = b.get(map[x], img);
            if !assign(y, target, &mut map, &mut queue) {
                return None;
            }
        }
    }
    if map.contains(&UNSET) {
        return None;
    }
    let hom = (0..a.n).all(|x| (0..a.n).all(|y| map[a.get(x, y)] == b.get(map[x], map[y])));
    hom.then_some(map)
}

/// Result of checking one relator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelatorCheck {
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationReport {
    pub cardinality: usize,
    pub relators: Vec<RelatorCheck>,
}

impl PresentationReport {
    pub fn all_hold(&self) -> bool {
        self.relators.iter().all(|r| r.holds)
    }
}

/// The closure of a [`GeneratorSet`] under composition.
#[derive(Debug, Clone)]
pub struct RelMonoid {
    gens: GeneratorSet,
    elements: Vec<Relation>,
    words: Vec<Word>,
    cayley: Vec<Vec<usize>>,
    table: MulTable,
    lookup: HashMap<Vec<u64>, usize>,
}

impl RelMonoid {
    /// Breadth-first closure from the identity, multiplying on the right by
    /// the generators in declared order. Element order is discovery order,
    /// so every canonical word is the shortest, then lexicographically least
    /// (by declared generator order), word for its element.
    pub fn generate(gens: &GeneratorSet) -> Self {
        let id = Relation::identity(gens.carrier());
        let mut elements = vec![id.clone()];
        let mut words = vec![Word::default()];
        let mut lookup = HashMap::from([(id.bits().to_vec(), 0)]);
        let mut cayley: Vec<Vec<usize>> = Vec::new();
        let mut next = 0;
        while next < elements.len() {
            let mut row = Vec::with_capacity(gens.len());
            for g in 0..gens.len() {
                let prod = elements[next].compose(gens.relation(g)).expect("endo-relations");
                let idx = match lookup.get(prod.bits()) {
                    Some(&i) => i,
                    None => {
                        let i = elements.len();
                        lookup.insert(prod.bits().to_vec(), i);
                        let mut w = words[next].clone();
                        w.0.push(g);
                        words.push(w);
                        elements.push(prod);
                        i
                    }
                };
                row.push(idx);
            }
            cayley.push(row);
            next += 1;
        }
        let walk = |start: usize, w: &Word| w.0.iter().fold(start, |x, &g| cayley[x][g]);
        let n = elements.len();
        let table = MulTable::from_fn(n, |a, b| walk(a, &words[b]));
        RelMonoid { gens: gens.clone(), elements, words, cayley, table, lookup }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn carrier(&self) -> &FiniteSet {
        self.gens.carrier()
    }

    pub fn element(&self, i: usize) -> &Relation {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Relation] {
        &self.elements
    }

    pub fn word(&self, i: usize) -> &Word {
        &self.words[i]
    }

    /// Canonical word in caret notation, `e` for the identity.
    pub fn word_string(&self, i: usize) -> String {
        self.gens.render(&self.words[i])
    }

    pub fn cayley(&self, element: usize, generator: usize) -> usize {
        self.cayley[element][generator]
    }

    pub fn table(&self) -> &MulTable {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table.get(a, b)
    }

    pub fn index_of(&self, r: &Relation) -> Option<usize> {
        if r.source() != self.carrier() || r.target() != self.carrier() {
            return None;
        }
        self.lookup.get(r.bits()).copied()
    }

    /// Element denoted by a word, following the Cayley graph.
    pub fn element_of_word(&self, w: &Word) -> usize {
        w.0.iter().fold(0, |x, &g| self.cayley[x][g])
    }

    pub fn parse_element(&self, text: &str) -> Result<usize> {
        Ok(self.element_of_word(&self.gens.parse_word(text)?))
    }

    pub fn evaluate_word(&self, text: &str) -> Result<Relation> {
        self.gens.evaluate(text)
    }

    /// Compares the relations denoted by both words.
    pub fn check_relator(&self, lhs: &str, rhs: &str) -> Result<bool> {
        Ok(self.gens.evaluate(lhs)? == self.gens.evaluate(rhs)?)
    }

    pub fn check_presentation(&self, relators: &[(&str, &str)]) -> Result<PresentationReport> {
        let relators = relators
            .iter()
            .map(|&(l, r)| {
                Ok(RelatorCheck { lhs: l.to_string(), rhs: r.to_string(), holds: self.check_relator(l, r)? })
            })
            .collect::<Result<_>>()?;
        Ok(PresentationReport { cardinality: self.len(), relators })
    }

    /// Elements related to `b` from `a`: all `g` with `a S(g) b`, in element order.
    pub fn relating(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.len()).filter(|&g| self.elements[g].contains(a, b)).collect()
    }

    /// The group of invertible elements with its induced table.
    pub fn units(&self) -> Submonoid {
        let members: Vec<usize> = (0..self.len())
            .filter(|&x| (0..self.len()).any(|y| self.mul(x, y) == 0 && self.mul(y, x) == 0))
            .collect();
        Submonoid::induced(self, members)
    }

    /// Generator indices `g` with `g g = e`.
    pub fn involutions(&self) -> Vec<usize> {
        (0..self.gens.len())
            .filter(|&g| {
                let x = self.cayley[0][g];
                x != 0 && self.cayley[x][g] == 0
            })
            .collect()
    }

    /// Cayley graph in Graphviz syntax. Every `(element, generator)` pair
    /// yields one edge; involutive generators are drawn without arrowheads,
    /// dashed for the first and dotted for the next ones.
    pub fn cayley_dot(&self, name: &str) -> String {
        let inv = self.involutions();
        let mut w = DotWriter::directed(name);
        for i in 0..self.len() {
            w.node(&format!("n{i}"), &self.word_string(i), None);
        }
        for i in 0..self.len() {
            for g in 0..self.gens.len() {
                let attrs = match inv.iter().position(|&h| h == g) {
                    Some(0) => "dir=none, style=dashed",
                    Some(_) => "dir=none, style=dotted",
                    None => "style=solid",
                };
                let label = self.gens.name(g).to_string();
                w.edge(&format!("n{i}"), &format!("n{}", self.cayley[i][g]), Some(&label), Some(attrs));
            }
        }
        w.finish()
    }
}

/// A subset of a monoid closed under its product, with local indices.
#[derive(Debug, Clone)]
pub struct Submonoid {
    pub members: Vec<usize>,
    pub table: MulTable,
}

impl Submonoid {
    fn induced(m: &RelMonoid, members: Vec<usize>) -> Self {
        let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let table = MulTable::from_fn(members.len(), |a, b| pos[&m.mul(members[a], members[b])]);
        Submonoid { members, table }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// A monoid homomorphism determined by the images of the domain generators.
#[derive(Clone)]
pub struct MonoidMap {
    domain: Arc<RelMonoid>,
    codomain: Arc<RelMonoid>,
    images: Vec<usize>,
    element_map: Vec<usize>,
}

impl fmt::Debug for MonoidMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imgs: Vec<String> = self
            .images
            .iter()
            .enumerate()
            .map(|(g, &i)| format!("{} -> {}", self.domain.gens.name(g), self.codomain.word_string(i)))
            .collect();
        f.debug_struct("MonoidMap").field("images", &imgs).finish()
    }
}

/// Extends generator images along the Cayley graph. Returns `None` when two
/// words for the same element would get different images.
fn propagate(dom: &RelMonoid, cod: &MulTable, images: &[usize]) -> Option<Vec<usize>> {
    const UNSET: usize = usize::MAX;
    let mut map = vec![UNSET; dom.len()];
    map[0] = cod.identity().unwrap_or(0);
    for x in 0..dom.len() {
        debug_assert!(map[x] != UNSET, "discovery order visits parents first");
        for (g, &img) in images.iter().enumerate() {
            let y = dom.cayley[x][g];
            let target = cod.get(map[x], img);
            if map[y] == UNSET {
                map[y] = target;
            } else if map[y] != target {
                return None;
            }
        }
    }
    Some(map)
}

impl MonoidMap {
    pub fn from_generator_images(
        domain: Arc<RelMonoid>,
        codomain: Arc<RelMonoid>,
        images: Vec<usize>,
    ) -> Result<Self> {
        if images.len() != domain.gens.len() {
            return Err(Error::Structure(format!(
                "expected {} generator images, got {}",
                domain.gens.len(),
                images.len()
            )));
        }
        if let Some(&bad) = images.iter().find(|&&i| i >= codomain.len()) {
            return Err(Error::Structure(format!("image index {bad} outside codomain")));
        }
        let element_map = propagate(&domain, &codomain.table, &images).ok_or_else(|| {
            Error::Verification("generator images do not extend to a homomorphism".into())
        })?;
        Ok(MonoidMap { domain, codomain, images, element_map })
    }

    /// Images given as words in the codomain's generators.
    pub fn from_words(domain: Arc<RelMonoid>, codomain: Arc<RelMonoid>, words: &[&str]) -> Result<Self> {
        let images = words.iter().map(|w| codomain.parse_element(w)).collect::<Result<_>>()?;
        Self::from_generator_images(domain, codomain, images)
    }

    pub fn identity(m: Arc<RelMonoid>) -> Self {
        let images = (0..m.gens.len()).map(|g| m.cayley[0][g]).collect();
        let element_map = (0..m.len()).collect();
        MonoidMap { domain: m.clone(), codomain: m, images, element_map }
    }

    pub fn domain(&self) -> &Arc<RelMonoid> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<RelMonoid> {
        &self.codomain
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.element_map[x]
    }

    pub fn element_map(&self) -> &[usize] {
        &self.element_map
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &MonoidMap) -> Result<MonoidMap> {
        if !Arc::ptr_eq(&self.codomain, &next.domain) && !same_monoid(&self.codomain, &next.domain) {
            return Err(Error::Structure("monoid maps are not composable".into()));
        }
        let element_map: Vec<usize> = self.element_map.iter().map(|&x| next.element_map[x]).collect();
        let images = (0..self.domain.gens.len())
            .map(|g| element_map[self.domain.cayley[0][g]])
            .collect();
        Ok(MonoidMap { domain: self.domain.clone(), codomain: next.codomain.clone(), images, element_map })
    }

    pub fn is_isomorphism(&self) -> bool {
        if self.domain.len() != self.codomain.len() {
            return false;
        }
        let mut hit = vec![false; self.codomain.len()];
        for &y in &self.element_map {
            if hit[y] {
                return false;
            }
            hit[y] = true;
        }
        true
    }

    pub fn is_identity(&self) -> bool {
        same_monoid(&self.domain, &self.codomain)
            && self.element_map.iter().enumerate().all(|(i, &j)| i == j)
    }
}

impl PartialEq for MonoidMap {
    fn eq(&self, other: &Self) -> bool {
        same_monoid(&self.domain, &other.domain)
            && same_monoid(&self.codomain, &other.codomain)
            && self.element_map == other.element_map
    }
}

/// Same carrier and the same elements in the same order.
pub fn same_monoid(a: &RelMonoid, b: &RelMonoid) -> bool {
    std::ptr::eq(a, b) || (a.carrier() == b.carrier() && a.elements == b.elements)
}

/// All automorphisms, by brute force over generator-image tuples with
/// propagation along the Cayley graph.
pub fn automorphisms(m: &Arc<RelMonoid>) -> Vec<MonoidMap> {
    let k = m.gens.len();
    let n = m.len();
    let mut out = Vec::new();
    let mut images = vec![0usize; k];
    loop {
        if let Some(map) = propagate(m, &m.table, &images) {
            let mut hit = vec![false; n];
            if map.iter().all(|&y| !std::mem::replace(&mut hit[y], true)) {
                out.push(MonoidMap {
                    domain: m.clone(),
                    codomain: m.clone(),
                    images: images.clone(),
                    element_map: map,
                });
            }
        }
        // odometer over n^k tuples
        let mut pos = 0;
        loop {
            if pos == k {
                return out;
            }
            images[pos] += 1;
            if images[pos] < n {
                break;
            }
            images[pos] = 0;
            pos += 1;
        }
    }
}

/// Multiplication table of a list of endomorphisms closed under composition;
/// `get(a, b)` is "apply `a`, then `b`".
pub fn composition_table(maps: &[MonoidMap]) -> Result<MulTable> {
    let index: HashMap<&[usize], usize> =
        maps.iter().enumerate().map(|(i, m)| (m.element_map.as_slice(), i)).collect();
    let n = maps.len();
    let mut data = Vec::with_capacity(n * n);
    for a in maps {
        for b in maps {
            let c = a.then(b)?;
            let i = *index
                .get(c.element_map.as_slice())
                .ok_or_else(|| Error::Verification("maps are not closed under composition".into()))?;
            data.push(i);
        }
    }
    Ok(MulTable { n, data })
}
