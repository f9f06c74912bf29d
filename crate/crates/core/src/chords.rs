//! Pitch classes, the 28-chord universe `H` (major, minor and augmented
//! triads), Douthett's parsimony relations, the named relations P, L, U, S, T,
//! the T/I group on Z12 and parsimonious graphs.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use itertools::Itertools;

use crate::dot::DotWriter;
use crate::error::{Error, Result};
use crate::monoid::{GeneratorSet, RelMonoid};
use crate::relcore::{FiniteSet, Relation};

/// Canonical spelling of the twelve pitch classes, C = 0.
pub const PC_NAMES: [&str; 12] = [
    "C", "C#", "D", "Eb", "E", "F", "F#", "G", "G#", "A", "Bb", "B",
];

/// Names of the augmented triads by index: Ab, F, D, B.
const AUG_NAMES: [&str; 4] = ["Ab", "F", "D", "B"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PitchClass(u8);

impl PitchClass {
    pub fn new(value: i64) -> Self {
        PitchClass(value.rem_euclid(12) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn transpose(self, by: i64) -> Self {
        Self::new(self.0 as i64 + by)
    }

    /// Circular semitone distance, 0..=6.
    pub fn distance(self, other: PitchClass) -> u8 {
        let d = (other.0 + 12 - self.0) % 12;
        d.min(12 - d)
    }

    pub fn name(self) -> &'static str {
        PC_NAMES[self.0 as usize]
    }
}

impl FromStr for PitchClass {
    type Err = Error;

    /// Accepts a note name (`C`, `F#`, `Fs`, `Bb`, ...) or an integer 0..=11.
    fn from_str(s: &str) -> Result<Self> {
        if let Ok(v) = s.parse::<u8>() {
            if v < 12 {
                return Ok(PitchClass(v));
            }
        }
        parse_root(s)
            .filter(|(_, used)| *used == s.len())
            .map(|(pc, _)| pc)
            .ok_or_else(|| Error::UnknownElement(s.to_string()))
    }
}

impl fmt::Display for PitchClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A sorted, duplicate-free set of pitch classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PcSet(Vec<PitchClass>);

impl PcSet {
    pub fn new(members: impl IntoIterator<Item = PitchClass>) -> Self {
        let mut v: Vec<_> = members.into_iter().collect();
        v.sort();
        v.dedup();
        PcSet(v)
    }

    pub fn from_values(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| PitchClass::new(v)))
    }

    pub fn members(&self) -> &[PitchClass] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, pc: PitchClass) -> bool {
        self.0.binary_search(&pc).is_ok()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Quality {
    Major,
    Minor,
    Augmented,
}

/// A triad of `H`. For augmented chords `root` is the index 0..=3
/// (Ab = 0, F = 1, D = 2, B = 3).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chord {
    quality: Quality,
    root: u8,
}

impl Chord {
    pub fn major(root: i64) -> Self {
        Chord { quality: Quality::Major, root: root.rem_euclid(12) as u8 }
    }

    pub fn minor(root: i64) -> Self {
        Chord { quality: Quality::Minor, root: root.rem_euclid(12) as u8 }
    }

    pub fn augmented(index: i64) -> Self {
        Chord { quality: Quality::Augmented, root: index.rem_euclid(4) as u8 }
    }

    pub fn quality(self) -> Quality {
        self.quality
    }

    pub fn root(self) -> u8 {
        self.root
    }

    /// Position in the canonical order of `H`: majors 0..12, minors 12..24,
    /// augmented 24..28.
    pub fn index(self) -> usize {
        match self.quality {
            Quality::Major => self.root as usize,
            Quality::Minor => 12 + self.root as usize,
            Quality::Augmented => 24 + self.root as usize,
        }
    }

    pub fn from_index(i: usize) -> Self {
        match i {
            0..=11 => Chord::major(i as i64),
            12..=23 => Chord::minor(i as i64 - 12),
            24..=27 => Chord::augmented(i as i64 - 24),
            _ => panic!("chord index {i} outside H"),
        }
    }

    pub fn all() -> impl Iterator<Item = Chord> {
        (0..28).map(Chord::from_index)
    }

    pub fn pc_set(self) -> PcSet {
        let r = self.root as i64;
        match self.quality {
            Quality::Major => PcSet::from_values(&[r, r + 4, r + 7]),
            Quality::Minor => PcSet::from_values(&[r, r + 3, r + 7]),
            Quality::Augmented => PcSet::from_values(&[r, r + 4, r + 8]),
        }
    }

    /// Transposition by `n` semitones; augmented indices move by `n mod 4`.
    pub fn transpose(self, n: i64) -> Self {
        match self.quality {
            Quality::Major => Chord::major(self.root as i64 + n),
            Quality::Minor => Chord::minor(self.root as i64 + n),
            Quality::Augmented => Chord::augmented(self.root as i64 + n),
        }
    }
}

/// Parses a root spelling at the start of `s`, returning the pitch class and
/// the number of bytes consumed.
fn parse_root(s: &str) -> Option<(PitchClass, usize)> {
    let mut chars = s.chars();
    let base = match chars.next()? {
        'C' => 0,
        'D' => 2,
        'E' => 4,
        'F' => 5,
        'G' => 7,
        'A' => 9,
        'B' => 11,
        _ => return None,
    };
    let (shift, used) = match chars.next() {
        Some('#') | Some('s') => (1, 2),
        Some('b') => (-1, 2),
        _ => (0, 1),
    };
    // only the spellings C#/Db, D#/Eb, F#/Gb, G#/Ab, A#/Bb are accepted
    if shift != 0 && matches!((base, shift), (4, 1) | (11, 1) | (5, -1) | (0, -1)) {
        return None;
    }
    Some((PitchClass::new(base + shift), used))
}

/// Parses names such as `CM`, `F#m`, `Fsm`, `Bbm`, `Daug`.
pub fn parse_chord(name: &str) -> Result<Chord> {
    let err = |token: &str| Error::ChordParse { input: name.to_string(), token: token.to_string() };
    let (pc, used) = match parse_root(name) {
        Some(x) => x,
        None => {
            let tok: String = name.chars().take(2).collect();
            return Err(err(if tok.is_empty() { "<empty>" } else { &tok }));
        }
    };
    let rest = &name[used..];
    let root = pc.value() as i64;
    match rest {
        "M" => Ok(Chord::major(root)),
        "m" => Ok(Chord::minor(root)),
        "aug" => Ok(Chord::augmented(root)),
        "" => Err(err("<missing quality>")),
        other => Err(err(other)),
    }
}

pub fn format_chord(c: Chord) -> String {
    match c.quality {
        Quality::Major => format!("{}M", PC_NAMES[c.root as usize]),
        Quality::Minor => format!("{}m", PC_NAMES[c.root as usize]),
        Quality::Augmented => format!("{}aug", AUG_NAMES[c.root as usize]),
    }
}

impl FromStr for Chord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_chord(s)
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_chord(*self))
    }
}

/// The set `H` in canonical order, labelled by canonical chord names.
pub fn universe() -> &'static FiniteSet {
    static H: OnceLock<FiniteSet> = OnceLock::new();
    H.get_or_init(|| FiniteSet::new(Chord::all().map(format_chord)).expect("distinct names"))
}

/// The twelve pitch classes labelled by canonical note names.
pub fn z12() -> &'static FiniteSet {
    static Z: OnceLock<FiniteSet> = OnceLock::new();
    Z.get_or_init(|| FiniteSet::new(PC_NAMES).expect("distinct names"))
}

/// Resolves any accepted chord spelling to its index in `H`.
pub fn chord_index(name: &str) -> Result<usize> {
    Ok(parse_chord(name)?.index())
}

/// Douthett's parsimony relation, decided by exhaustive search over the
/// bijections `a -> b`: the intersection is fixed pointwise, exactly `m`
/// elements move by a semitone, exactly `n` by a whole tone, the rest stay.
pub fn pmn_related(a: &PcSet, b: &PcSet, m: usize, n: usize) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::Domain(format!(
            "P(m,n) needs pc-sets of equal cardinality, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    if m + n > a.len() {
        return Ok(false);
    }
    let src = a.members();
    Ok(b.members().iter().copied().permutations(b.len()).any(|image| {
        let (mut semis, mut tones) = (0, 0);
        for (&x, &y) in src.iter().zip(&image) {
            if b.contains(x) && y != x {
                return false;
            }
            match x.distance(y) {
                0 => {}
                1 => semis += 1,
                2 => tones += 1,
                _ => return false,
            }
        }
        semis == m && tones == n
    }))
}

/// `P(m,n)` on `H` without self-pairs.
pub fn pmn_relation(m: usize, n: usize) -> Relation {
    let h = universe();
    let sets: Vec<PcSet> = Chord::all().map(Chord::pc_set).collect();
    let mut r = Relation::empty(h, h);
    for i in 0..28 {
        for j in 0..28 {
            if i != j && pmn_related(&sets[i], &sets[j], m, n).expect("triads") {
                r.insert(i, j);
            }
        }
    }
    r
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedRelation {
    P,
    L,
    U,
    S,
    T,
}

impl FromStr for NamedRelation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" => Ok(Self::P),
            "L" => Ok(Self::L),
            "U" => Ok(Self::U),
            "S" => Ok(Self::S),
            "T" => Ok(Self::T),
            other => Err(Error::UnknownElement(other.to_string())),
        }
    }
}

fn symmetric(clauses: impl IntoIterator<Item = (Chord, Chord)>) -> Relation {
    let h = universe();
    let mut r = Relation::empty(h, h);
    for (a, b) in clauses {
        r.insert(a.index(), b.index());
        r.insert(b.index(), a.index());
    }
    r
}

/// The relations on `H` given by their defining clauses, symmetrized.
pub fn named_relation(name: NamedRelation) -> Relation {
    use Chord as C;
    let roots = 0..12i64;
    let augs = 0..4i64;
    match name {
        NamedRelation::P => symmetric(
            roots.map(|n| (C::major(n), C::minor(n)))
                .chain(augs.map(|n| (C::augmented(n), C::augmented(n)))),
        ),
        NamedRelation::L => symmetric(
            roots.map(|n| (C::major(n), C::minor(n + 4)))
                .chain(augs.map(|n| (C::augmented(n), C::augmented(n)))),
        ),
        NamedRelation::U => symmetric(roots.flat_map(|n| {
            [(C::major(n), C::augmented(n % 4)), (C::minor(n), C::augmented((n + 3) % 4))]
        })),
        NamedRelation::S => symmetric(roots.flat_map(|n| {
            [
                (C::major(n), C::minor(n)),
                (C::major(n), C::minor(n + 4)),
                (C::major(n), C::augmented(n % 4)),
                (C::minor(n), C::augmented((n + 3) % 4)),
            ]
        })),
        NamedRelation::T => symmetric(roots.flat_map(|n| {
            [
                (C::major(n), C::major(n + 4)),
                (C::major(n), C::major(n + 8)),
                (C::major(n), C::minor(n + 1)),
                (C::major(n), C::minor(n + 5)),
                (C::major(n), C::augmented((n + 3) % 4)),
                (C::minor(n), C::minor(n + 4)),
                (C::minor(n), C::minor(n + 8)),
                (C::minor(n), C::augmented(n % 4)),
            ]
        })),
    }
}

/// `T_n : x -> x + n` on Z12.
pub fn transposition(n: i64) -> Relation {
    let z = z12();
    Relation::from_fn(z, z, |x| (x as i64 + n).rem_euclid(12) as usize)
}

/// `I_n : x -> n - x` on Z12.
pub fn inversion(n: i64) -> Relation {
    let z = z12();
    Relation::from_fn(z, z, |x| (n - x as i64).rem_euclid(12) as usize)
}

/// The T/I group on Z12 generated by `T` = T_1 and `I` = I_0.
pub fn ti_generators() -> GeneratorSet {
    GeneratorSet::new(z12().clone(), vec![("T", transposition(1)), ("I", inversion(0))])
        .expect("valid generators")
}

/// The T/I group as a relation monoid, plus the index of every `T_n`
/// (first 12 entries) and `I_n` (last 12 entries).
pub fn ti_context() -> (RelMonoid, Vec<usize>) {
    let m = RelMonoid::generate(&ti_generators());
    let names = (0..12)
        .map(transposition)
        .chain((0..12).map(inversion))
        .map(|r| m.index_of(&r).expect("T/I element in closure"))
        .collect();
    (m, names)
}

/// An undirected simple graph of a `P(m,n)` relation on `H`.
#[derive(Debug, Clone)]
pub struct ParsimoniousGraph {
    m: usize,
    n: usize,
    adjacency: Vec<Vec<usize>>,
}

impl ParsimoniousGraph {
    pub fn new(m: usize, n: usize) -> Self {
        Self::from_relation(m, n, &pmn_relation(m, n))
    }

    fn from_relation(m: usize, n: usize, r: &Relation) -> Self {
        let adjacency = (0..r.source().len())
            .map(|i| r.image_of(i).filter(|&j| j != i).collect())
            .collect();
        ParsimoniousGraph { m, n, adjacency }
    }

    /// Douthett's Cube Dance, `P(1,0)`.
    pub fn cube_dance() -> Self {
        Self::new(1, 0)
    }

    /// Douthett's Weitzmann's Waltz, `P(2,0)`.
    pub fn weitzmann() -> Self {
        Self::new(2, 0)
    }

    pub fn params(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn degree(&self, c: Chord) -> usize {
        self.adjacency[c.index()].len()
    }

    pub fn neighbors(&self, c: Chord) -> impl Iterator<Item = Chord> + '_ {
        self.adjacency[c.index()].iter().map(|&j| Chord::from_index(j))
    }

    /// Edges `(a, b)` with `a < b` by index.
    pub fn edges(&self) -> Vec<(Chord, Chord)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, ns)| {
                ns.iter()
                    .filter(move |&&j| j > i)
                    .map(move |&j| (Chord::from_index(i), Chord::from_index(j)))
            })
            .collect()
    }

    pub fn has_edge(&self, a: Chord, b: Chord) -> bool {
        self.adjacency[a.index()].contains(&b.index())
    }

    fn distances_from(&self, start: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.adjacency.len()];
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in &self.adjacency[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path length from `a` to `b` with a witness path, or `None`
    /// when `b` is unreachable. Among all shortest paths the witness is the
    /// one whose vertex index sequence is lexicographically greatest.
    pub fn distance(&self, a: Chord, b: Chord) -> Option<(usize, Vec<Chord>)> {
        let to_b = self.distances_from(b.index());
        let total = to_b[a.index()]?;
        let mut path = vec![a];
        let mut cur = a.index();
        for remaining in (0..total).rev() {
            cur = *self.adjacency[cur]
                .iter()
                .filter(|&&w| to_b[w] == Some(remaining))
                .max()
                .expect("a BFS predecessor exists");
            path.push(Chord::from_index(cur));
        }
        Some((total, path))
    }

    /// Douthett's HexaCycles: the P/L subgraph of the Cube Dance split into
    /// its connected components, each returned as a cycle starting at its
    /// lowest-index chord and continuing towards the lower-index neighbour.
    pub fn hexacycles(&self) -> Result<Vec<Vec<Chord>>> {
        if self.params() != (1, 0) {
            return Err(Error::Domain(format!(
                "HexaCycles are defined on the P(1,0) graph, not P({},{})",
                self.m, self.n
            )));
        }
        let pl = named_relation(NamedRelation::P)
            .union(&named_relation(NamedRelation::L))
            .expect("same universe");
        let sub = ParsimoniousGraph::from_relation(1, 0, &pl);
        let mut seen = [false; 28];
        let mut cycles = Vec::new();
        for start in 0..28 {
            if seen[start] || sub.adjacency[start].is_empty() {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut prev = start;
            let mut cur = *sub.adjacency[start].iter().min().unwrap();
            while cur != start {
                if seen[cur] {
                    return Err(Error::Domain("P/L subgraph component is not a cycle".into()));
                }
                seen[cur] = true;
                cycle.push(cur);
                let next = sub.adjacency[cur].iter().copied().find(|&w| w != prev);
                prev = cur;
                cur = next.ok_or_else(|| Error::Domain("P/L subgraph has a dead end".into()))?;
            }
            cycles.push(cycle.into_iter().map(Chord::from_index).collect());
        }
        Ok(cycles)
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut w = DotWriter::undirected(name);
        for c in Chord::all() {
            w.node(&format!("n{}", c.index()), &format_chord(c), None);
        }
        for (a, b) in self.edges() {
            w.edge(&format!("n{}", a.index()), &format!("n{}", b.index()), None, None);
        }
        w.finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pc_set_encoding() {
        assert_eq!(Chord::major(0).pc_set(), PcSet::from_values(&[0, 4, 7]));
        assert_eq!(Chord::augmented(0).pc_set(), PcSet::from_values(&[0, 4, 8]));
        assert_eq!(Chord::augmented(3).pc_set(), PcSet::from_values(&[3, 7, 11]));
        assert_eq!(Chord::minor(9).pc_set(), PcSet::from_values(&[9, 0, 4]));
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_chord("F#m").unwrap(), Chord::minor(6));
        assert_eq!(parse_chord("Fsm").unwrap(), Chord::minor(6));
        assert_eq!(parse_chord("Daug").unwrap(), Chord::augmented(2));
        assert_eq!(parse_chord("Abaug").unwrap(), Chord::augmented(0));
        assert_eq!(parse_chord("Caug").unwrap(), Chord::augmented(0));
        assert_eq!(parse_chord("Baug").unwrap(), Chord::augmented(3));
        assert_eq!(parse_chord("Faug").unwrap(), Chord::augmented(1));
        assert_eq!(parse_chord("A#M").unwrap(), Chord::major(10));
        assert_eq!(parse_chord("GbM").unwrap(), Chord::major(6));
        assert!(matches!(
            parse_chord("Xb"),
            Err(Error::ChordParse { ref token, .. }) if token == "Xb"
        ));
        assert!(matches!(
            parse_chord("Cx"),
            Err(Error::ChordParse { ref token, .. }) if token == "x"
        ));
        assert!(parse_chord("E#M").is_err());
        assert!(parse_chord("C").is_err());
        assert!(parse_chord("").is_err());
    }

    #[test]
    fn format_is_canonical_and_round_trips() {
        for c in Chord::all() {
            assert_eq!(parse_chord(&format_chord(c)).unwrap(), c);
        }
        assert_eq!(format_chord(Chord::minor(10)), "Bbm");
        assert_eq!(format_chord(Chord::major(8)), "G#M");
        assert_eq!(format_chord(Chord::augmented(1)), "Faug");
    }

    #[test]
    fn pmn_cardinality_mismatch() {
        let a = PcSet::from_values(&[0, 4, 7]);
        let b = PcSet::from_values(&[0, 4, 7, 10]);
        assert!(matches!(pmn_related(&a, &b, 1, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn pmn_spot_checks() {
        let cm = Chord::major(0).pc_set();
        assert!(pmn_related(&cm, &Chord::minor(0).pc_set(), 1, 0).unwrap());
        assert!(pmn_related(&cm, &Chord::augmented(3).pc_set(), 2, 0).unwrap());
        assert!(!pmn_related(&Chord::major(9).pc_set(), &Chord::major(6).pc_set(), 1, 0).unwrap());
        // semitone moves wrap around the octave: B -> C
        let a = PcSet::from_values(&[11, 4]);
        let b = PcSet::from_values(&[0, 4]);
        assert!(pmn_related(&a, &b, 1, 0).unwrap());
        // a whole-tone move is not two semitone moves
        let d = PcSet::from_values(&[2, 4]);
        assert!(pmn_related(&b, &d, 0, 1).unwrap());
        assert!(!pmn_related(&b, &d, 1, 0).unwrap());
    }

    #[test]
    fn named_relation_clauses() {
        let u = named_relation(NamedRelation::U);
        let d_aug = Chord::augmented(2).index();
        assert!(u.contains(Chord::major(2).index(), d_aug));
        assert_eq!(
            u.image("Daug").unwrap(),
            vec!["DM", "F#M", "BbM", "Ebm", "Gm", "Bm"]
        );
        assert!(!u.is_function());
        let p = named_relation(NamedRelation::P);
        assert!(p.relates("Gm", "GM").unwrap());
        assert_eq!(p.image("CM").unwrap(), vec!["Cm"]);
        assert!(p.relates("Daug", "Daug").unwrap());
        let s = named_relation(NamedRelation::S);
        assert!(s.relates("AM", "Faug").unwrap());
        assert!(s.relates("Faug", "Bbm").unwrap());
        assert!(s.relates("Bbm", "F#M").unwrap());
        // the printed "Bbm S F#m" step is not an S pair
        assert!(!s.relates("Bbm", "F#m").unwrap());
    }

    #[test]
    fn ti_examples() {
        let (m, names) = ti_context();
        assert_eq!(m.len(), 24);
        let i4 = m.element(names[12 + 4]);
        assert_eq!(i4.image("C").unwrap(), vec!["E"]);
        let composed = inversion(4).compose(&transposition(3)).unwrap();
        assert_eq!(composed, inversion(7));
        assert!(m.elements().iter().all(Relation::is_bijection));
    }

    #[test]
    fn graph_distance_examples() {
        let g = ParsimoniousGraph::cube_dance();
        let (d, path) = g.distance(Chord::major(9), Chord::major(6)).unwrap();
        assert_eq!(d, 3);
        assert_eq!(
            path,
            vec![Chord::major(9), Chord::augmented(1), Chord::minor(10), Chord::major(6)]
        );
        assert_eq!(g.distance(Chord::major(0), Chord::minor(0)).unwrap().0, 1);
        assert_eq!(
            g.distance(Chord::major(4), Chord::major(4)).unwrap(),
            (0, vec![Chord::major(4)])
        );
    }

    #[test]
    fn hexacycles_shape() {
        let g = ParsimoniousGraph::cube_dance();
        let cycles = g.hexacycles().unwrap();
        assert_eq!(cycles.len(), 4);
        assert!(cycles.iter().all(|c| c.len() == 6));
        let names: Vec<String> = cycles[0].iter().map(|&c| format_chord(c)).collect();
        assert_eq!(names, ["CM", "Cm", "G#M", "G#m", "EM", "Em"]);
        for cyc in &cycles {
            for k in 0..6 {
                assert!(g.has_edge(cyc[k], cyc[(k + 1) % 6]));
            }
        }
        assert!(matches!(ParsimoniousGraph::weitzmann().hexacycles(), Err(Error::Domain(_))));
    }
}
