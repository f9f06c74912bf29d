//! Analysis contexts: a monoid of relations acting on a carrier, i.e. a strict
//! functor from a one-object category to `Rel`. The five presets cover the
//! triad monoids on `H` and the T/I group on Z12.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use crate::chords::{self, named_relation, parse_chord, NamedRelation, PitchClass};
use crate::error::{Error, Result};
use crate::monoid::{GeneratorSet, PresentationReport, RelMonoid};
use crate::relcore::{FiniteSet, Relation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preset {
    Upl,
    S,
    T,
    St,
    Ti,
}

impl Preset {
    pub const ALL: [Preset; 5] = [Preset::Upl, Preset::S, Preset::T, Preset::St, Preset::Ti];

    pub fn tag(self) -> &'static str {
        match self {
            Preset::Upl => "upl",
            Preset::S => "s",
            Preset::T => "t",
            Preset::St => "st",
            Preset::Ti => "ti",
        }
    }

    /// The defining relators of the preset monoid.
    pub fn relators(self) -> &'static [(&'static str, &'static str)] {
        match self {
            Preset::Upl => &[
                ("P^2", "e"),
                ("L^2", "e"),
                ("LPL", "PLP"),
                ("U^3", "U"),
                ("UP", "UL"),
                ("PU", "LU"),
                ("U^2PU^2", "PU^2PU^2P"),
                ("(UP)^2U^2", "P(UP)^2U^2P"),
                ("U^2(PU)^2", "PU^2(PU)^2P"),
            ],
            Preset::S => &[("S^7", "S^5")],
            Preset::T => &[("T^4", "T^3")],
            Preset::St => &[
                ("TS", "ST"),
                ("S^3", "ST"),
                ("T^4", "T^3"),
                ("TS^2", "T^2"),
                ("ST^3", "ST^2"),
            ],
            Preset::Ti => &[("T^12", "e"), ("I^2", "e"), ("TI", "IT^11")],
        }
    }

    /// Cardinality the preset monoid is expected to have.
    pub fn expected_size(self) -> usize {
        match self {
            Preset::Upl => 40,
            Preset::S => 7,
            Preset::T => 4,
            Preset::St => 8,
            Preset::Ti => 24,
        }
    }

    pub fn generators(self) -> GeneratorSet {
        let h = chords::universe().clone();
        let gens = |names: &[NamedRelation]| {
            GeneratorSet::new(
                h.clone(),
                names.iter().map(|&n| (format!("{n:?}"), named_relation(n))).collect(),
            )
            .expect("valid generators")
        };
        match self {
            Preset::Upl => gens(&[NamedRelation::U, NamedRelation::P, NamedRelation::L]),
            Preset::S => gens(&[NamedRelation::S]),
            Preset::T => gens(&[NamedRelation::T]),
            Preset::St => gens(&[NamedRelation::S, NamedRelation::T]),
            Preset::Ti => chords::ti_generators(),
        }
    }
}

impl FromStr for Preset {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.tag() == s)
            .ok_or_else(|| Error::UnknownPreset(s.to_string()))
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CarrierKind {
    Chords,
    PitchClasses,
    Plain,
}

/// A monoid of relations used as the support of PK-Nets.
#[derive(Debug, Clone)]
pub struct Context {
    name: String,
    monoid: Arc<RelMonoid>,
    aliases: Vec<(String, usize)>,
    kind: CarrierKind,
}

impl Context {
    /// Cached preset contexts; repeated calls share the same monoid.
    pub fn preset(p: Preset) -> Context {
        static CACHE: OnceLock<Vec<Context>> = OnceLock::new();
        let all = CACHE.get_or_init(|| Preset::ALL.iter().map(|&p| Context::build(p)).collect());
        all[Preset::ALL.iter().position(|&q| q == p).unwrap()].clone()
    }

    pub fn by_name(tag: &str) -> Result<Context> {
        Ok(Self::preset(tag.parse()?))
    }

    fn build(p: Preset) -> Context {
        let monoid = Arc::new(RelMonoid::generate(&p.generators()));
        let (aliases, kind) = if p == Preset::Ti {
            let names: Vec<(String, usize)> = (0..12)
                .map(|n| (format!("T{n}"), chords::transposition(n)))
                .chain((0..12).map(|n| (format!("I{n}"), chords::inversion(n))))
                .map(|(name, r)| (name, monoid.index_of(&r).expect("T/I element")))
                .collect();
            (names, CarrierKind::PitchClasses)
        } else {
            (Vec::new(), CarrierKind::Chords)
        };
        Context { name: p.tag().to_string(), monoid, aliases, kind }
    }

    /// A context over an arbitrary generator set; element names are
    /// canonical words and carrier elements are matched by exact label.
    pub fn custom(name: &str, gens: &GeneratorSet) -> Context {
        Context {
            name: name.to_string(),
            monoid: Arc::new(RelMonoid::generate(gens)),
            aliases: Vec::new(),
            kind: CarrierKind::Plain,
        }
    }

    /// Replaces the monoid by a shared instance, keeping the naming rules.
    pub fn with_monoid(&self, monoid: Arc<RelMonoid>) -> Context {
        Context { monoid, ..self.clone() }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn monoid(&self) -> &Arc<RelMonoid> {
        &self.monoid
    }

    pub fn carrier(&self) -> &FiniteSet {
        self.monoid.carrier()
    }

    pub fn relation(&self, element: usize) -> &Relation {
        self.monoid.element(element)
    }

    pub fn len(&self) -> usize {
        self.monoid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monoid.is_empty()
    }

    /// Display name of an element: `T3`/`I5` style names in the T/I group,
    /// canonical words elsewhere.
    pub fn element_name(&self, element: usize) -> String {
        self.aliases
            .iter()
            .find(|(_, i)| *i == element)
            .map(|(n, _)| n.clone())
            .unwrap_or_else(|| self.monoid.word_string(element))
    }

    /// Resolves an element name or a word in the generators.
    pub fn resolve(&self, text: &str) -> Result<usize> {
        let t = text.trim();
        if let Some((_, i)) = self.aliases.iter().find(|(n, _)| n == t) {
            return Ok(*i);
        }
        self.monoid.parse_element(t)
    }

    /// Resolves a carrier element, accepting every chord or pitch-class
    /// spelling the carrier kind understands.
    pub fn carrier_index(&self, label: &str) -> Result<usize> {
        let carrier = self.carrier();
        if let Some(i) = carrier.index_of(label) {
            return Ok(i);
        }
        match self.kind {
            CarrierKind::Chords => Ok(parse_chord(label)?.index()),
            CarrierKind::PitchClasses => Ok(label.parse::<PitchClass>()?.value() as usize),
            CarrierKind::Plain => Err(Error::UnknownElement(label.to_string())),
        }
    }

    pub fn check_presentation(&self, relators: &[(&str, &str)]) -> Result<PresentationReport> {
        self.monoid.check_presentation(relators)
    }

    /// All elements relating `a` to `b`, in element order.
    pub fn relate(&self, a: &str, b: &str) -> Result<Vec<usize>> {
        Ok(self.monoid.relating(self.carrier_index(a)?, self.carrier_index(b)?))
    }
}
