//! The category of elements `H(S)` of a context, its faithful projection to
//! the monoid, the inverse construction, and lifts of diagram morphisms.

use std::collections::HashMap;
use std::sync::Arc;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::monoid::{MonoidMap, MulTable, RelMonoid};
use crate::relcore::{FiniteSet, Relation};
use crate::report::Report;

/// How composable morphisms compose.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Composition {
    /// Explicit partial table keyed by `(first, second)`.
    Table(HashMap<(usize, usize), usize>),
    /// Morphisms are `(s, g, s')` triples; composites multiply the tags.
    Tagged(MulTable),
}

/// A finite category with morphisms `(src, dst, tag)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallCategory {
    objects: Vec<String>,
    morphisms: Vec<(usize, usize, usize)>,
    identities: Vec<usize>,
    composition: Composition,
    tags: usize,
    // dense `(src, tag, dst) -> morphism` lookup
    index: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl SmallCategory {
    /// Builds a category from an explicit composition table
    /// (`(f, g) -> f then g`) and audits it exhaustively.
    pub fn from_table(
        objects: Vec<String>,
        morphisms: Vec<(usize, usize, usize)>,
        identities: Vec<usize>,
        table: HashMap<(usize, usize), usize>,
    ) -> Result<Self> {
        let cat = Self::assemble(objects, morphisms, identities, Composition::Table(table))?;
        let report = cat.audit(None);
        if !report.passed() {
            return Err(audit_error(&report));
        }
        Ok(cat)
    }

    fn assemble(
        objects: Vec<String>,
        morphisms: Vec<(usize, usize, usize)>,
        identities: Vec<usize>,
        composition: Composition,
    ) -> Result<Self> {
        if identities.len() != objects.len() {
            return Err(Error::Structure("one identity per object is required".into()));
        }
        let n = objects.len();
        let tags = morphisms.iter().map(|m| m.2 + 1).max().unwrap_or(0);
        let mut index = vec![NONE; n * n * tags];
        for (i, &(s, t, g)) in morphisms.iter().enumerate() {
            if s >= n || t >= n {
                return Err(Error::Structure(format!("morphism {i} has an unknown endpoint")));
            }
            let slot = &mut index[(s * tags + g) * n + t];
            if *slot != NONE {
                return Err(Error::Structure(format!("morphism {i} duplicates an earlier one")));
            }
            *slot = i;
        }
        Ok(SmallCategory { objects, morphisms, identities, composition, tags, index })
    }

    /// The monoid as a one-object category; morphism `i` is element `i`.
    pub fn from_monoid(m: &RelMonoid) -> Self {
        let morphisms = (0..m.len()).map(|g| (0, 0, g)).collect();
        Self::assemble(vec!["*".into()], morphisms, vec![0], Composition::Tagged(m.table().clone()))
            .expect("well-formed monoid category")
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    /// `(src, dst, tag)`.
    pub fn morphism(&self, f: usize) -> (usize, usize, usize) {
        self.morphisms[f]
    }

    pub fn source(&self, f: usize) -> usize {
        self.morphisms[f].0
    }

    pub fn target(&self, f: usize) -> usize {
        self.morphisms[f].1
    }

    pub fn identity(&self, object: usize) -> usize {
        self.identities[object]
    }

    pub fn find(&self, src: usize, dst: usize, tag: usize) -> Option<usize> {
        if tag >= self.tags || src >= self.objects.len() || dst >= self.objects.len() {
            return None;
        }
        Some(self.index[(src * self.tags + tag) * self.objects.len() + dst]).filter(|&i| i != NONE)
    }

    /// `f` then `g`; `None` when not composable or undefined.
    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        let (s, m, a) = self.morphisms[f];
        let (m2, t, b) = self.morphisms[g];
        if m != m2 {
            return None;
        }
        match &self.composition {
            Composition::Table(t) => t.get(&(f, g)).copied(),
            Composition::Tagged(table) => self.find(s, t, table.get(a, b)),
        }
    }

    fn outgoing(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.objects.len()];
        for (f, &(s, _, _)) in self.morphisms.iter().enumerate() {
            out[s].push(f);
        }
        out
    }

    /// Unit laws and closure on every composable pair; associativity on
    /// every composable triple, or — when `generators` is given — only on
    /// triples whose middle morphism is a generator, after checking that
    /// the generators (with identities) generate every morphism. The latter
    /// is sufficient by induction on the length of the middle factor.
    pub fn audit(&self, generators: Option<&[usize]>) -> Report {
        let mut report = Report::new();
        let out = self.outgoing();
        let mut failure = None;
        'units: for (o, &id) in self.identities.iter().enumerate() {
            if self.morphisms[id].0 != o || self.morphisms[id].1 != o {
                failure = Some(format!("identity of {} is not an endomorphism of it", self.objects[o]));
                break;
            }
            for f in 0..self.morphisms.len() {
                let (s, t, _) = self.morphisms[f];
                if (s == o && self.compose(id, f) != Some(f)) || (t == o && self.compose(f, id) != Some(f)) {
                    failure = Some(format!("identity of {} is not neutral for morphism {f}", self.objects[o]));
                    break 'units;
                }
            }
        }
        report.record("unit laws", failure);

        let mut failure = None;
        'closure: for f in 0..self.morphisms.len() {
            for &g in &out[self.morphisms[f].1] {
                match self.compose(f, g) {
                    Some(c) if self.source(c) == self.source(f) && self.target(c) == self.target(g) => {}
                    _ => {
                        failure = Some(format!("morphisms {f} and {g} have no well-typed composite"));
                        break 'closure;
                    }
                }
            }
        }
        let closed = failure.is_none();
        report.record("composition closure", failure);
        if !closed {
            return report;
        }

        let middles: Vec<usize> = match generators {
            Some(gens) => {
                let mut reached = vec![false; self.morphisms.len()];
                let mut frontier: Vec<usize> = self.identities.clone();
                for &i in &frontier {
                    reached[i] = true;
                }
                while let Some(f) = frontier.pop() {
                    for &g in gens {
                        if self.source(g) == self.target(f) {
                            let c = self.compose(f, g).expect("closed");
                            if !reached[c] {
                                reached[c] = true;
                                frontier.push(c);
                            }
                        }
                    }
                }
                report.record(
                    "generation",
                    reached.iter().position(|r| !r).map(|f| format!("morphism {f} is not a composite of generators")),
                );
                gens.to_vec()
            }
            None => (0..self.morphisms.len()).collect(),
        };
        let incoming: Vec<Vec<usize>> = {
            let mut v = vec![Vec::new(); self.objects.len()];
            for (f, &(_, t, _)) in self.morphisms.iter().enumerate() {
                v[t].push(f);
            }
            v
        };
        let mut failure = None;
        'assoc: for &a in &middles {
            let (s, t, _) = self.morphisms[a];
            for &x in &incoming[s] {
                let xa = self.compose(x, a).expect("closed");
                for &y in &out[t] {
                    if self.compose(xa, y) != self.compose(x, self.compose(a, y).expect("closed")) {
                        failure = Some(format!("({x} {a}) {y} differs from {x} ({a} {y})"));
                        break 'assoc;
                    }
                }
            }
        }
        report.record("associativity", failure);
        report
    }
}

impl SmallCategory {
    /// The structural audit, using the cheapest sound associativity test:
    /// for tagged categories, middle factors range over the morphisms whose
    /// tags generate the monoid, provided they generate every morphism.
    pub fn full_audit(&self) -> Report {
        if let Composition::Tagged(table) = &self.composition {
            if let Some(e) = table.identity() {
                let tags = generating_set(table, e);
                let gens: Vec<usize> =
                    (0..self.morphisms.len()).filter(|&f| tags.contains(&self.morphisms[f].2)).collect();
                let report = self.audit(Some(&gens));
                if report.passed() {
                    return report;
                }
            }
        }
        self.audit(None)
    }
}

fn audit_error(report: &Report) -> Error {
    let c = report.failures().next().expect("a failure");
    Error::Verification(format!("{}: {}", c.name, c.detail.clone().unwrap_or_default()))
}

/// A functor between small categories.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatFunctor {
    pub source: Arc<SmallCategory>,
    pub target: Arc<SmallCategory>,
    pub object_map: Vec<usize>,
    pub morphism_map: Vec<usize>,
}

impl CatFunctor {
    pub fn identity(c: Arc<SmallCategory>) -> Self {
        CatFunctor {
            object_map: (0..c.object_count()).collect(),
            morphism_map: (0..c.morphism_count()).collect(),
            source: c.clone(),
            target: c,
        }
    }

    /// Sources, targets, identities and composites are preserved.
    pub fn check(&self) -> Report {
        let (a, b) = (&self.source, &self.target);
        let mut report = Report::new();
        report.record(
            "endpoints preserved",
            (0..a.morphism_count())
                .find(|&f| {
                    let g = self.morphism_map[f];
                    b.source(g) != self.object_map[a.source(f)] || b.target(g) != self.object_map[a.target(f)]
                })
                .map(|f| format!("morphism {f}")),
        );
        report.record(
            "identities preserved",
            (0..a.object_count())
                .find(|&o| self.morphism_map[a.identity(o)] != b.identity(self.object_map[o]))
                .map(|o| format!("object {}", a.objects()[o])),
        );
        let out = a.outgoing();
        let mut failure = None;
        'comp: for f in 0..a.morphism_count() {
            for &g in &out[a.target(f)] {
                let fg = a.compose(f, g).expect("audited category");
                if b.compose(self.morphism_map[f], self.morphism_map[g]) != Some(self.morphism_map[fg]) {
                    failure = Some(format!("composite of {f} and {g}"));
                    break 'comp;
                }
            }
        }
        report.record("composition preserved", failure);
        report
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &CatFunctor) -> Result<CatFunctor> {
        if self.target != next.source {
            return Err(Error::Structure("functors are not composable".into()));
        }
        Ok(CatFunctor {
            source: self.source.clone(),
            target: next.target.clone(),
            object_map: self.object_map.iter().map(|&o| next.object_map[o]).collect(),
            morphism_map: self.morphism_map.iter().map(|&f| next.morphism_map[f]).collect(),
        })
    }
}

/// Injective on every hom-set.
pub fn is_faithful(f: &CatFunctor) -> bool {
    let mut seen = HashMap::new();
    (0..f.source.morphism_count()).all(|m| {
        let (s, t, _) = f.source.morphism(m);
        seen.insert((s, t, f.morphism_map[m]), m).is_none()
    })
}

/// `H(S)` of a context together with the projection `h(S)` onto the monoid.
pub fn grothendieck(ctx: &Context) -> Result<(Arc<SmallCategory>, CatFunctor)> {
    let base = Arc::new(SmallCategory::from_monoid(ctx.monoid()));
    grothendieck_from_assignment(base, ctx.carrier(), ctx.monoid().elements())
}

/// `H(S)` for an assignment of one relation per monoid element, where the
/// monoid is given as a one-object category. Requires `id ⊆ S(e)` and
/// `S(g) ; S(g') ⊆ S(g g')`.
pub fn grothendieck_from_assignment(
    base: Arc<SmallCategory>,
    carrier: &FiniteSet,
    relations: &[Relation],
) -> Result<(Arc<SmallCategory>, CatFunctor)> {
    let table = match &base.composition {
        Composition::Tagged(t) if base.object_count() == 1 => t.clone(),
        _ => return Err(Error::Structure("the base must be a monoid viewed as a one-object category".into())),
    };
    if relations.len() != table.len() {
        return Err(Error::Structure(format!(
            "{} relations for a monoid with {} elements",
            relations.len(),
            table.len()
        )));
    }
    for r in relations {
        if r.source() != carrier || r.target() != carrier {
            return Err(Error::SetMismatch("every relation must be an endo-relation on the carrier".into()));
        }
    }
    let e = table.identity().ok_or_else(|| Error::Structure("monoid table has no identity".into()))?;
    if let Some((i, _)) = Relation::identity(carrier).first_excess(&relations[e])? {
        return Err(Error::Domain(format!(
            "the identity element does not relate {} to itself, so H(S) would lack identities",
            carrier.label(i)
        )));
    }
    for a in 0..table.len() {
        for b in 0..table.len() {
            if !relations[a].compose(&relations[b])?.included_in(&relations[table.get(a, b)])? {
                return Err(Error::Domain(format!("assignment is not lax at elements {a} and {b}")));
            }
        }
    }
    let mut morphisms = Vec::new();
    for (g, r) in relations.iter().enumerate() {
        for (s, t) in r.pairs() {
            morphisms.push((s, t, g));
        }
    }
    morphisms.sort_by_key(|&(s, t, g)| (s, g, t));
    let objects: Vec<String> = carrier.labels().to_vec();
    let identities: Vec<usize> = (0..objects.len())
        .map(|s| morphisms.binary_search_by_key(&(s, e, s), |&(a, b, g)| (a, g, b)).expect("identity present"))
        .collect();
    let cat = SmallCategory::assemble(objects, morphisms, identities, Composition::Tagged(table.clone()))?;
    let report = cat.full_audit();
    if !report.passed() {
        return Err(audit_error(&report));
    }
    let cat = Arc::new(cat);
    let functor = CatFunctor {
        source: cat.clone(),
        target: base.clone(),
        object_map: vec![0; cat.object_count()],
        morphism_map: cat.morphisms.iter().map(|&(_, _, g)| g).collect(),
    };
    Ok((cat, functor))
}

/// A generating set of the monoid, chosen greedily in element order.
fn generating_set(table: &MulTable, e: usize) -> Vec<usize> {
    let mut chosen = Vec::new();
    let mut reached = vec![false; table.len()];
    reached[e] = true;
    for g in 0..table.len() {
        if reached[g] {
            continue;
        }
        chosen.push(g);
        let mut frontier: Vec<usize> = (0..table.len()).filter(|&x| reached[x]).collect();
        while let Some(x) = frontier.pop() {
            for &c in &chosen {
                let y = table.get(x, c);
                if !reached[y] {
                    reached[y] = true;
                    frontier.push(y);
                }
            }
        }
    }
    chosen
}

/// Recovers the relation assignment from a faithful functor into a monoid:
/// `s S'(g) s'` iff some `f: s -> s'` is sent to `g`.
pub fn from_faithful(k: &CatFunctor) -> Result<(FiniteSet, Vec<Relation>)> {
    if !is_faithful(k) {
        return Err(Error::Domain("the functor is not faithful".into()));
    }
    if k.target.object_count() != 1 {
        return Err(Error::Structure("the target must be a one-object category".into()));
    }
    let carrier = FiniteSet::new(k.source.objects().iter().cloned())?;
    let mut relations = vec![Relation::empty(&carrier, &carrier); k.target.morphism_count()];
    for f in 0..k.source.morphism_count() {
        let (s, t, _) = k.source.morphism(f);
        let g = k.morphism_map[f];
        relations[g] = relations[g].with(s, t);
    }
    Ok((carrier, relations))
}

/// A morphism of contexts `(L, λ)`: a monoid map and a function between the
/// carriers such that `S(g) ; λ ⊆ λ ; S'(L(g))` for every `g`.
#[derive(Debug, Clone)]
pub struct DiagramMorphism {
    pub l: MonoidMap,
    pub lambda: Relation,
}

impl DiagramMorphism {
    pub fn identity(ctx: &Context) -> Self {
        DiagramMorphism { l: MonoidMap::identity(ctx.monoid().clone()), lambda: Relation::identity(ctx.carrier()) }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &DiagramMorphism) -> Result<DiagramMorphism> {
        Ok(DiagramMorphism { l: self.l.then(&next.l)?, lambda: self.lambda.compose(&next.lambda)? })
    }
}

/// The functor `H(S) -> H(S')` sending `(s, g, s')` to
/// `(λ(s), L(g), λ(s'))`, checked to be a functor and to make
/// `lift ; h(S') = h(S) ; L` commute.
pub fn lift_morphism(d: &DiagramMorphism, src: &Context, dst: &Context) -> Result<CatFunctor> {
    if !crate::monoid::same_monoid(d.l.domain(), src.monoid()) || !crate::monoid::same_monoid(d.l.codomain(), dst.monoid()) {
        return Err(Error::Structure("L does not go between the given contexts".into()));
    }
    if d.lambda.source() != src.carrier() || d.lambda.target() != dst.carrier() {
        return Err(Error::SetMismatch("λ must go between the context carriers".into()));
    }
    if !d.lambda.is_function() {
        return Err(Error::Domain("λ must be a function".into()));
    }
    for g in 0..src.len() {
        let lhs = src.relation(g).compose(&d.lambda)?;
        let rhs = d.lambda.compose(dst.relation(d.l.apply(g)))?;
        if let Some((s, _)) = lhs.first_excess(&rhs)? {
            return Err(Error::Verification(format!(
                "naturality fails at element {} and {}",
                src.element_name(g),
                src.carrier().label(s)
            )));
        }
    }
    let (hs, ps) = grothendieck(src)?;
    let (hd, pd) = grothendieck(dst)?;
    let lam = |s: usize| d.lambda.apply(s).expect("function");
    let morphism_map = (0..hs.morphism_count())
        .map(|f| {
            let (s, t, g) = hs.morphism(f);
            hd.find(lam(s), lam(t), d.l.apply(g)).expect("naturality guarantees the image")
        })
        .collect();
    let lift = CatFunctor {
        source: hs.clone(),
        target: hd,
        object_map: (0..hs.object_count()).map(lam).collect(),
        morphism_map,
    };
    let report = lift.check();
    if !report.passed() {
        return Err(audit_error(&report));
    }
    let l_functor = CatFunctor {
        source: ps.target.clone(),
        target: pd.target.clone(),
        object_map: vec![0],
        morphism_map: d.l.element_map().to_vec(),
    };
    if lift.then(&pd)? != ps.then(&l_functor)? {
        return Err(Error::Verification("the square h(S') ∘ lift = L ∘ h(S) does not commute".into()));
    }
    Ok(lift)
}
