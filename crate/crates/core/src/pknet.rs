//! Relational PK-Nets `(R, S, F, φ)` over thin shape categories, their
//! verification, labeling search, and PK-homographies.
//!
//! Composition order follows [`Relation::compose`]: for an arrow
//! `f: X -> Y` the naturality condition of `φ` is checked as
//! `R(f) ; φ_Y ⊆ φ_X ; S(F(f))` ("apply `R(f)` then `φ_Y`" is included in
//! "apply `φ_X` then `S(F(f))`").

use std::collections::BTreeMap;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::monoid::{same_monoid, MonoidMap};
use crate::relcore::{FiniteSet, Relation};
use crate::report::Report;

/// A finite poset viewed as a category: one arrow `a -> b` iff `a <= b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThinCategory {
    objects: Vec<String>,
    order: Vec<Vec<bool>>,
    covers: Vec<(usize, usize)>,
}

impl ThinCategory {
    /// The ordinal `n`: objects `X0..X(n-1)` in a chain.
    pub fn ordinal(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("ordinal shape needs at least one object".into()));
        }
        let objects = (0..n).map(|i| format!("X{i}")).collect();
        Self::from_covers(objects, (1..n).map(|i| (i - 1, i)).collect())
    }

    /// The poset generated by `pairs` (reflexive-transitive closure). The
    /// generating arrows are the covering pairs of the resulting order.
    pub fn from_covers(objects: Vec<String>, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let n = objects.len();
        if n == 0 {
            return Err(Error::Domain("shape needs at least one object".into()));
        }
        for (i, o) in objects.iter().enumerate() {
            if objects[..i].contains(o) {
                return Err(Error::DuplicateLabel(o.clone()));
            }
        }
        let mut order = vec![vec![false; n]; n];
        for (i, row) in order.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in &pairs {
            if a >= n || b >= n {
                return Err(Error::Structure(format!("arrow ({a}, {b}) references a missing object")));
            }
            order[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if order[i][k] {
                    let via = order[k].clone();
                    for (cell, reach) in order[i].iter_mut().zip(via) {
                        *cell |= reach;
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && order[i][j] && order[j][i] {
                    return Err(Error::Structure(format!(
                        "arrows between {} and {} form a cycle; shapes must be partial orders",
                        objects[i], objects[j]
                    )));
                }
            }
        }
        let mut covers = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && order[a][b] && !(0..n).any(|c| c != a && c != b && order[a][c] && order[c][b]) {
                    covers.push((a, b));
                }
            }
        }
        Ok(ThinCategory { objects, order, covers })
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn object_index(&self, name: &str) -> Result<usize> {
        self.objects
            .iter()
            .position(|o| o == name)
            .ok_or_else(|| Error::Structure(format!("unknown shape object `{name}`")))
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order[a][b]
    }

    /// The generating (covering) arrows.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        self.covers.contains(&(a, b))
    }

    /// All non-identity arrows in lexicographic order.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && self.order[a][b])
            .collect()
    }

    pub fn arrow_name(&self, (a, b): (usize, usize)) -> String {
        format!("{}->{}", self.objects[a], self.objects[b])
    }

    /// Parses `X->Y` into an arrow of the shape.
    pub fn parse_arrow(&self, text: &str) -> Result<(usize, usize)> {
        let (a, b) = text
            .split_once("->")
            .ok_or_else(|| Error::Structure(format!("arrow `{text}` is not of the form `X->Y`")))?;
        let arrow = (self.object_index(a.trim())?, self.object_index(b.trim())?);
        if arrow.0 == arrow.1 || !self.leq(arrow.0, arrow.1) {
            return Err(Error::Structure(format!("`{text}` is not a non-identity arrow of the shape")));
        }
        Ok(arrow)
    }

    /// Every path of generating arrows from `a` to `b`, each as a list of
    /// objects visited (including both ends).
    pub fn paths(&self, a: usize, b: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = vec![a];
        self.paths_rec(b, &mut stack, &mut out);
        out
    }

    fn paths_rec(&self, b: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let cur = *stack.last().unwrap();
        if cur == b {
            out.push(stack.clone());
            return;
        }
        for &(x, y) in &self.covers {
            if x == cur && self.order[y][b] {
                stack.push(y);
                self.paths_rec(b, stack, out);
                stack.pop();
            }
        }
    }

    fn first_path(&self, a: usize, b: usize) -> Vec<usize> {
        let mut path = vec![a];
        let mut cur = a;
        while cur != b {
            cur = self
                .covers
                .iter()
                .find(|&&(x, y)| x == cur && self.order[y][b])
                .map(|&(_, y)| y)
                .expect("a <= b has a cover path");
            path.push(cur);
        }
        path
    }
}

/// The lax functor `R: Δ -> Rel`: a non-void set per object, a relation per
/// generating arrow and optionally explicit relations on composite arrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormFunctor {
    sets: Vec<FiniteSet>,
    relations: BTreeMap<(usize, usize), Relation>,
}

impl FormFunctor {
    pub fn new(
        shape: &ThinCategory,
        sets: Vec<FiniteSet>,
        relations: BTreeMap<(usize, usize), Relation>,
    ) -> Result<Self> {
        if sets.len() != shape.len() {
            return Err(Error::Structure(format!(
                "form has {} sets for {} shape objects",
                sets.len(),
                shape.len()
            )));
        }
        for (o, s) in shape.objects().iter().zip(&sets) {
            if s.is_empty() {
                return Err(Error::EmptySet(format!("R({o})")));
            }
        }
        for (&(a, b), r) in &relations {
            if a == b || !shape.leq(a, b) {
                return Err(Error::Structure(format!("({a}, {b}) is not an arrow of the shape")));
            }
            if r.source() != &sets[a] || r.target() != &sets[b] {
                return Err(Error::SetMismatch(format!(
                    "R({}) does not go from R({}) to R({})",
                    shape.arrow_name((a, b)),
                    shape.objects()[a],
                    shape.objects()[b]
                )));
            }
        }
        if let Some(&c) = shape.covers().iter().find(|c| !relations.contains_key(c)) {
            return Err(Error::Structure(format!(
                "no relation for generating arrow {}",
                shape.arrow_name(c)
            )));
        }
        Ok(FormFunctor { sets, relations })
    }

    pub fn set(&self, object: usize) -> &FiniteSet {
        &self.sets[object]
    }

    pub fn sets(&self) -> &[FiniteSet] {
        &self.sets
    }

    pub fn explicit(&self) -> &BTreeMap<(usize, usize), Relation> {
        &self.relations
    }

    /// `R(a -> b)`: explicit when supplied, otherwise the composite along
    /// the first generating path; the identity relation when `a == b`.
    pub fn relation(&self, shape: &ThinCategory, a: usize, b: usize) -> Relation {
        if a == b {
            return Relation::identity(&self.sets[a]);
        }
        if let Some(r) = self.relations.get(&(a, b)) {
            return r.clone();
        }
        let path = shape.first_path(a, b);
        path.windows(2)
            .map(|w| self.relation(shape, w[0], w[1]))
            .reduce(|acc, r| acc.compose(&r).expect("matching sets"))
            .expect("non-empty path")
    }
}

/// The functor `F: Δ -> C`: a monoid element per generating arrow and
/// optionally declared labels on composite arrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    labels: BTreeMap<(usize, usize), usize>,
}

impl Labeling {
    pub fn new(shape: &ThinCategory, ctx: &Context, labels: BTreeMap<(usize, usize), usize>) -> Result<Self> {
        for (&(a, b), &g) in &labels {
            if a == b || !shape.leq(a, b) {
                return Err(Error::Structure(format!("({a}, {b}) is not an arrow of the shape")));
            }
            if g >= ctx.len() {
                return Err(Error::Structure(format!("label index {g} outside the context monoid")));
            }
        }
        if let Some(&c) = shape.covers().iter().find(|c| !labels.contains_key(c)) {
            return Err(Error::Structure(format!("no label for generating arrow {}", shape.arrow_name(c))));
        }
        Ok(Labeling { labels })
    }

    /// Labels given as element names or words, keyed by `X->Y`.
    pub fn from_words(shape: &ThinCategory, ctx: &Context, words: &[(&str, &str)]) -> Result<Self> {
        let mut labels = BTreeMap::new();
        for &(arrow, word) in words {
            labels.insert(shape.parse_arrow(arrow)?, ctx.resolve(word)?);
        }
        Self::new(shape, ctx, labels)
    }

    pub fn declared(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.labels
    }

    fn path_product(&self, ctx: &Context, path: &[usize]) -> usize {
        path.windows(2)
            .fold(0, |acc, w| ctx.monoid().mul(acc, self.labels[&(w[0], w[1])]))
    }

    /// `F(a -> b)`: declared label, else the product along the first path.
    pub fn label(&self, shape: &ThinCategory, ctx: &Context, a: usize, b: usize) -> usize {
        if a == b {
            return 0;
        }
        self.labels
            .get(&(a, b))
            .copied()
            .unwrap_or_else(|| self.path_product(ctx, &shape.first_path(a, b)))
    }

    /// Labels rendered with the context's element names, keyed by arrow name.
    pub fn describe(&self, shape: &ThinCategory, ctx: &Context) -> Vec<(String, String)> {
        self.labels
            .iter()
            .map(|(&arrow, &g)| (shape.arrow_name(arrow), ctx.element_name(g)))
            .collect()
    }
}

/// A lax natural transformation given by one relation per shape object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaxNatTrans {
    components: Vec<Relation>,
}

impl LaxNatTrans {
    pub fn new(components: Vec<Relation>) -> Self {
        LaxNatTrans { components }
    }

    pub fn component(&self, object: usize) -> &Relation {
        &self.components[object]
    }

    pub fn components(&self) -> &[Relation] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// `η ⊆ η'` componentwise.
    pub fn included_in(&self, other: &LaxNatTrans) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::Structure("transformations have different object counts".into()));
        }
        for (a, b) in self.components.iter().zip(&other.components) {
            if !a.included_in(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn pair_name(r: &Relation, (i, j): (usize, usize)) -> String {
    format!("({}, {})", r.source().label(i), r.target().label(j))
}

/// Checks `R(f) ; R(g) ⊆ R(g ∘ f)` for every composable pair of arrows.
pub fn verify_lax_functor(shape: &ThinCategory, form: &FormFunctor) -> Result<Report> {
    if form.sets.len() != shape.len() {
        return Err(Error::Structure("form does not match the shape".into()));
    }
    let mut report = Report::new();
    let n = shape.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a == b || b == c || !shape.leq(a, b) || !shape.leq(b, c) {
                    continue;
                }
                let lhs = form.relation(shape, a, b).compose(&form.relation(shape, b, c))?;
                let rhs = form.relation(shape, a, c);
                let name = format!(
                    "lax functor: R({}) ; R({}) ⊆ R({})",
                    shape.arrow_name((a, b)),
                    shape.arrow_name((b, c)),
                    shape.arrow_name((a, c))
                );
                report.record(name, lhs.first_excess(&rhs)?.map(|p| format!("missing pair {}", pair_name(&lhs, p))));
            }
        }
    }
    if report.checks.is_empty() {
        report.pass("lax functor: no composable pairs");
    }
    Ok(report)
}

/// Functoriality of `F`: all generating paths between the same endpoints
/// denote the same monoid element, which also equals any declared label.
pub fn verify_labeling(shape: &ThinCategory, ctx: &Context, lab: &Labeling) -> Report {
    let mut report = Report::new();
    for (a, b) in shape.arrows() {
        if shape.is_cover(a, b) {
            continue;
        }
        let mut values: Vec<(String, usize)> = shape
            .paths(a, b)
            .iter()
            .map(|p| {
                let names: Vec<&str> = p.iter().map(|&o| shape.objects()[o].as_str()).collect();
                (names.join("->"), lab.path_product(ctx, p))
            })
            .collect();
        if let Some(&g) = lab.labels.get(&(a, b)) {
            values.push((format!("declared {}", shape.arrow_name((a, b))), g));
        }
        let first = values[0].1;
        let failure = values.iter().find(|(_, v)| *v != first).map(|(what, v)| {
            format!(
                "{} gives {} but {} gives {}",
                values[0].0,
                ctx.element_name(first),
                what,
                ctx.element_name(*v)
            )
        });
        report.record(format!("functor: F({})", shape.arrow_name((a, b))), failure);
    }
    if report.checks.is_empty() {
        report.pass("functor: no composite arrows");
    }
    report
}

/// A relational PK-Net `(R, S, F, φ)`.
#[derive(Debug, Clone)]
pub struct RelPKNet {
    pub shape: ThinCategory,
    pub form: FormFunctor,
    pub context: Context,
    pub labeling: Labeling,
    pub phi: LaxNatTrans,
}

impl RelPKNet {
    /// Assembles a net after checking that every φ component goes from
    /// `R(X)` to the context carrier.
    pub fn new(
        shape: ThinCategory,
        form: FormFunctor,
        context: Context,
        labeling: Labeling,
        phi: LaxNatTrans,
    ) -> Result<Self> {
        if phi.len() != shape.len() {
            return Err(Error::Structure(format!(
                "φ has {} components for {} shape objects",
                phi.len(),
                shape.len()
            )));
        }
        for (x, c) in phi.components.iter().enumerate() {
            if c.source() != form.set(x) || c.target() != context.carrier() {
                return Err(Error::SetMismatch(format!(
                    "φ component at {} must go from R({}) to the context carrier",
                    shape.objects()[x],
                    shape.objects()[x]
                )));
            }
        }
        Ok(RelPKNet { shape, form, context, labeling, phi })
    }

    /// `S(F(a -> b))`.
    pub fn context_relation(&self, a: usize, b: usize) -> &Relation {
        self.context.relation(self.labeling.label(&self.shape, &self.context, a, b))
    }

    /// Carrier labels selected by φ at `object`, in index order.
    pub fn phi_image(&self, object: usize) -> Vec<String> {
        let c = self.phi.component(object);
        let mut out: Vec<usize> = c.pairs().map(|(_, j)| j).collect();
        out.sort();
        out.dedup();
        out.into_iter().map(|j| c.target().label(j).to_string()).collect()
    }
}

impl PartialEq for RelPKNet {
    fn eq(&self, other: &Self) -> bool {
        self.shape == other.shape
            && self.form == other.form
            && same_monoid(self.context.monoid(), other.context.monoid())
            && self.labeling == other.labeling
            && self.phi == other.phi
    }
}

/// Left-totality of each φ component and naturality inclusion per arrow.
pub fn verify_lax_nat(net: &RelPKNet) -> Result<Report> {
    let mut report = Report::new();
    for (x, c) in net.phi.components.iter().enumerate() {
        let failure = (0..c.source().len())
            .find(|&i| c.image_of(i).next().is_none())
            .map(|i| format!("{} has no image", c.source().label(i)));
        report.record(format!("left-total: φ({})", net.shape.objects()[x]), failure);
    }
    for (a, b) in net.shape.arrows() {
        let lhs = net.form.relation(&net.shape, a, b).compose(net.phi.component(b))?;
        let rhs = net.phi.component(a).compose(net.context_relation(a, b))?;
        let failure = lhs.first_excess(&rhs)?.map(|p| {
            format!(
                "{} is related by R then φ but not by φ then S({})",
                pair_name(&lhs, p),
                net.context.element_name(net.labeling.label(&net.shape, &net.context, a, b))
            )
        });
        report.record(format!("naturality: {}", net.shape.arrow_name((a, b))), failure);
    }
    Ok(report)
}

/// All conditions of a relational PK-Net.
pub fn verify_pknet(net: &RelPKNet) -> Result<Report> {
    let mut report = verify_lax_functor(&net.shape, &net.form)?;
    report.extend(verify_labeling(&net.shape, &net.context, &net.labeling));
    report.extend(verify_lax_nat(net)?);
    Ok(report)
}

/// The PK-Net conditions in `Sets`: every `R(f)`, every φ component and
/// every `S(F(f))` is a function, `R` is a strict functor and the naturality
/// squares commute exactly.
pub fn verify_functional(net: &RelPKNet) -> Result<Report> {
    let mut report = verify_labeling(&net.shape, &net.context, &net.labeling);
    for (x, c) in net.phi.components.iter().enumerate() {
        report.record(
            format!("function: φ({})", net.shape.objects()[x]),
            (!c.is_function()).then(|| "not a function".to_string()),
        );
    }
    for (a, b) in net.shape.arrows() {
        let name = net.shape.arrow_name((a, b));
        let r = net.form.relation(&net.shape, a, b);
        report.record(format!("function: R({name})"), (!r.is_function()).then(|| "not a function".into()));
        let s = net.context_relation(a, b);
        report.record(format!("function: S(F({name}))"), (!s.is_function()).then(|| "not a function".into()));
        let strict = net.shape.paths(a, b).iter().all(|p| {
            let composite = p
                .windows(2)
                .map(|w| net.form.relation(&net.shape, w[0], w[1]))
                .reduce(|x, y| x.compose(&y).expect("matching sets"))
                .expect("non-empty path");
            composite == r
        });
        report.record(format!("strict functor: R({name})"), (!strict).then(|| "differs from a path composite".into()));
        let lhs = r.compose(net.phi.component(b))?;
        let rhs = net.phi.component(a).compose(s)?;
        report.record(format!("commuting square: {name}"), (lhs != rhs).then(|| "square does not commute".into()));
    }
    Ok(report)
}

/// Upper bound on the number of candidate labelings a search may enumerate.
pub const SEARCH_BOUND: u128 = 1_000_000;

/// All labelings of the generating arrows by context elements for which the
/// data form a relational PK-Net.
///
/// With `functional_form` set the search emulates PK-Nets in `Sets`: the
/// supplied generating relations are replaced by "some total function", so
/// a labeling is kept iff φ and the labels are functions and, for every
/// generating arrow `f: X -> Y`, each `x` in `R(X)` has some `y` in `R(Y)`
/// with `φ_Y(y) = S(F(f))(φ_X(x))`.
pub fn search_labelings(
    shape: &ThinCategory,
    form: &FormFunctor,
    phi: &LaxNatTrans,
    ctx: &Context,
    functional_form: bool,
) -> Result<Vec<Labeling>> {
    let covers = shape.covers().to_vec();
    let n = ctx.len() as u128;
    let candidates = n.checked_pow(covers.len() as u32).unwrap_or(u128::MAX);
    if candidates > SEARCH_BOUND {
        return Err(Error::BudgetExceeded { candidates, bound: SEARCH_BOUND });
    }
    let mut out = Vec::new();
    let mut assignment = vec![0usize; covers.len()];
    for _ in 0..candidates {
        let labels: BTreeMap<_, _> = covers.iter().copied().zip(assignment.iter().copied()).collect();
        let lab = Labeling::new(shape, ctx, labels)?;
        let ok = if functional_form {
            admits_functional_form(shape, form, phi, ctx, &lab)
        } else {
            let net = RelPKNet::new(shape.clone(), form.clone(), ctx.clone(), lab.clone(), phi.clone())?;
            verify_pknet(&net)?.passed()
        };
        if ok {
            out.push(lab);
        }
        for slot in assignment.iter_mut() {
            *slot += 1;
            if *slot < ctx.len() {
                break;
            }
            *slot = 0;
        }
    }
    Ok(out)
}

fn admits_functional_form(
    shape: &ThinCategory,
    form: &FormFunctor,
    phi: &LaxNatTrans,
    ctx: &Context,
    lab: &Labeling,
) -> bool {
    if !phi.components.iter().all(Relation::is_function) || !verify_labeling(shape, ctx, lab).passed() {
        return false;
    }
    shape.covers().iter().all(|&(a, b)| {
        let s = ctx.relation(lab.label(shape, ctx, a, b));
        if !s.is_function() {
            return false;
        }
        let targets: Vec<usize> =
            (0..form.set(b).len()).map(|y| phi.component(b).apply(y).expect("function")).collect();
        (0..form.set(a).len()).all(|x| {
            let wanted = s.apply(phi.component(a).apply(x).expect("function")).expect("function");
            targets.contains(&wanted)
        })
    })
}

/// A PK-homography `(N, ν)` into nets over `target`: `N` maps the source
/// context monoid to the target's, and `ν` has one component per shape
/// object, each a relation between the two carriers.
#[derive(Debug, Clone)]
pub struct Homography {
    pub hom: MonoidMap,
    pub target: Context,
    pub nu: LaxNatTrans,
}

impl Homography {
    pub fn new(hom: MonoidMap, target: Context, nu: LaxNatTrans) -> Result<Self> {
        if !same_monoid(hom.codomain(), target.monoid()) {
            return Err(Error::Structure("N does not land in the target context".into()));
        }
        for c in nu.components() {
            if c.source() != hom.domain().carrier() || c.target() != target.carrier() {
                return Err(Error::SetMismatch("ν components must go between the context carriers".into()));
            }
        }
        Ok(Homography { hom, target, nu })
    }

    /// The same ν relation at every one of `objects` shape objects.
    pub fn uniform(hom: MonoidMap, target: Context, nu: Relation, objects: usize) -> Result<Self> {
        Self::new(hom, target, LaxNatTrans::new(vec![nu; objects]))
    }

    pub fn is_isography(&self) -> bool {
        self.hom.is_isomorphism() && self.nu.components().iter().all(Relation::is_bijection)
    }
}

/// Transports a net along `h`: labels are mapped through `N` and
/// `φ' = φ ; ν`, the least transformation the definition admits.
pub fn apply_homography(net: &RelPKNet, h: &Homography) -> Result<RelPKNet> {
    if !same_monoid(h.hom.domain(), net.context.monoid()) {
        return Err(Error::Structure("N does not start at the net's context".into()));
    }
    if h.nu.len() != net.shape.len() {
        return Err(Error::Structure("ν has the wrong number of components".into()));
    }
    let labels = net.labeling.labels.iter().map(|(&k, &g)| (k, h.hom.apply(g))).collect();
    let labeling = Labeling::new(&net.shape, &h.target, labels)?;
    let phi = LaxNatTrans::new(
        net.phi
            .components
            .iter()
            .zip(h.nu.components())
            .map(|(p, v)| p.compose(v))
            .collect::<Result<_>>()?,
    );
    let out = RelPKNet::new(net.shape.clone(), net.form.clone(), h.target.clone(), labeling, phi)?;
    let report = verify_pknet(&out)?;
    if !report.passed() {
        let first = report.failures().next().unwrap();
        return Err(Error::Verification(format!(
            "transported net fails `{}`: {}",
            first.name,
            first.detail.clone().unwrap_or_default()
        )));
    }
    Ok(out)
}

/// Checks that `h` is a PK-homography from `src` to `dst`.
pub fn verify_homography(src: &RelPKNet, dst: &RelPKNet, h: &Homography) -> Result<Report> {
    if src.shape != dst.shape {
        return Err(Error::Structure("shape mismatch: the nets have different shapes".into()));
    }
    if src.form != dst.form {
        return Err(Error::Structure("form mismatch: the nets do not share the form R".into()));
    }
    if !same_monoid(h.hom.domain(), src.context.monoid()) || !same_monoid(h.hom.codomain(), dst.context.monoid()) {
        return Err(Error::Structure("N does not go from the source to the target context".into()));
    }
    if h.nu.len() != src.shape.len() {
        return Err(Error::Structure("ν has the wrong number of components".into()));
    }
    let shape = &src.shape;
    let mut report = Report::new();
    for (a, b) in shape.arrows() {
        let f = src.labeling.label(shape, &src.context, a, b);
        let f2 = dst.labeling.label(shape, &dst.context, a, b);
        let mapped = h.hom.apply(f);
        report.record(
            format!("F' = NF at {}", shape.arrow_name((a, b))),
            (mapped != f2).then(|| {
                format!("N({}) = {} but F' gives {}", src.context.element_name(f), dst.context.element_name(mapped), dst.context.element_name(f2))
            }),
        );
    }
    for (x, c) in h.nu.components().iter().enumerate() {
        report.record(
            format!("left-total: ν({})", shape.objects()[x]),
            (!c.is_left_total()).then(|| "some carrier element has no image".to_string()),
        );
    }
    for (a, b) in shape.arrows() {
        let lhs = src.context_relation(a, b).compose(h.nu.component(b))?;
        let rhs = h.nu.component(a).compose(dst.context_relation(a, b))?;
        report.record(
            format!("ν naturality: {}", shape.arrow_name((a, b))),
            lhs.first_excess(&rhs)?.map(|p| format!("missing pair {}", pair_name(&lhs, p))),
        );
    }
    for x in 0..shape.len() {
        let moved = src.phi.component(x).compose(h.nu.component(x))?;
        report.record(
            format!("φ ; ν ⊆ φ' at {}", shape.objects()[x]),
            moved
                .first_excess(dst.phi.component(x))?
                .map(|p| format!("missing pair {}", pair_name(&moved, p))),
        );
    }
    Ok(report)
}

/// `h1` followed by `h2`: `N = N2 ∘ N1`, `ν = ν1 ; ν2` componentwise.
pub fn compose_homographies(h1: &Homography, h2: &Homography) -> Result<Homography> {
    if !same_monoid(h1.target.monoid(), h2.hom.domain()) || h1.nu.len() != h2.nu.len() {
        return Err(Error::Structure("homographies are not composable".into()));
    }
    let hom = h1.hom.then(&h2.hom)?;
    let nu = h1
        .nu
        .components()
        .iter()
        .zip(h2.nu.components())
        .map(|(a, b)| a.compose(b))
        .collect::<Result<_>>()?;
    Homography::new(hom, h2.target.clone(), LaxNatTrans::new(nu))
}

/// 2-morphism between homographies with the same `N`: `ν1 ⊆ ν2`.
pub fn homography_included(h1: &Homography, h2: &Homography) -> Result<bool> {
    if h1.hom != h2.hom {
        return Err(Error::Structure("inclusion compares homographies with the same N".into()));
    }
    h1.nu.included_in(&h2.nu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Preset;

    #[test]
    fn ordinal_arrow_counts() {
        assert!(ThinCategory::ordinal(0).is_err());
        assert_eq!(ThinCategory::ordinal(1).unwrap().arrows().len(), 0);
        assert_eq!(ThinCategory::ordinal(2).unwrap().arrows().len(), 1);
        let o3 = ThinCategory::ordinal(3).unwrap();
        assert_eq!(o3.arrows().len(), 3);
        assert_eq!(o3.covers(), &[(0, 1), (1, 2)]);
        assert_eq!(o3.paths(0, 2), vec![vec![0, 1, 2]]);
        assert_eq!(ThinCategory::ordinal(4).unwrap().arrows().len(), 6);
    }

    #[test]
    fn redundant_and_cyclic_generators() {
        let objs = vec!["A".to_string(), "B".to_string(), "C".to_string()];
        let t = ThinCategory::from_covers(objs.clone(), vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(t.covers(), &[(0, 1), (1, 2)]);
        assert!(ThinCategory::from_covers(objs.clone(), vec![(0, 1), (1, 0)]).is_err());
        let diamond = ThinCategory::from_covers(
            vec!["A".into(), "B".into(), "C".into(), "D".into()],
            vec![(0, 1), (0, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        assert_eq!(diamond.paths(0, 3).len(), 2);
        assert_eq!(diamond.parse_arrow("A->D").unwrap(), (0, 3));
        assert!(diamond.parse_arrow("B->C").is_err());
    }

    #[test]
    fn ordinal_two_any_word_is_functorial() {
        let ctx = Context::preset(Preset::Upl);
        let o2 = ThinCategory::ordinal(2).unwrap();
        for g in 0..ctx.len() {
            let lab = Labeling::new(&o2, &ctx, BTreeMap::from([((0, 1), g)])).unwrap();
            assert!(verify_labeling(&o2, &ctx, &lab).passed());
        }
    }

    #[test]
    fn diamond_labeling_must_commute() {
        let ctx = Context::preset(Preset::Upl);
        let d = ThinCategory::from_covers(
            vec!["A".into(), "B".into(), "C".into(), "D".into()],
            vec![(0, 1), (0, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        let ok = Labeling::from_words(&d, &ctx, &[("A->B", "P"), ("B->D", "L"), ("A->C", "L"), ("C->D", "P")]);
        // PL != LP in the dihedral subgroup
        assert!(!verify_labeling(&d, &ctx, &ok.unwrap()).passed());
        let good = Labeling::from_words(&d, &ctx, &[("A->B", "U"), ("B->D", "P"), ("A->C", "U"), ("C->D", "L")]).unwrap();
        // UP = UL
        assert!(verify_labeling(&d, &ctx, &good).passed());
    }

    #[test]
    fn missing_cover_rejected() {
        let o2 = ThinCategory::ordinal(2).unwrap();
        let s = FiniteSet::new(["x"]).unwrap();
        assert!(matches!(
            FormFunctor::new(&o2, vec![s.clone(), s.clone()], BTreeMap::new()),
            Err(Error::Structure(_))
        ));
        let empty = FiniteSet::new(Vec::<String>::new()).unwrap();
        assert!(matches!(
            FormFunctor::new(&o2, vec![s, empty], BTreeMap::new()),
            Err(Error::EmptySet(_))
        ));
    }
}
