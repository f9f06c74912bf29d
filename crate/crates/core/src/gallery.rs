//! Worked examples: the nets, progressions and homographies used throughout
//! the docs, tests and CLI fixtures.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::chords::{self, parse_chord, Chord};
use crate::context::{Context, Preset};
use crate::error::Result;
use crate::monoid::MonoidMap;
use crate::pknet::{FormFunctor, Homography, Labeling, LaxNatTrans, RelPKNet, ThinCategory};
use crate::relcore::{FiniteSet, Relation};

/// Opening progression of Muse's "Take A Bow".
pub const MUSE_PROGRESSION: [&str; 12] =
    ["DM", "Daug", "Gm", "GM", "Baug", "Cm", "CM", "Abaug", "Fm", "FM", "Faug", "Bbm"];

/// Transposition by `n` semitones acting on the 28 chords.
pub fn chord_transposition(n: i64) -> Relation {
    let h = chords::universe();
    Relation::from_fn(h, h, |i| Chord::from_index(i).transpose(n).index())
}

/// An ordinal net whose objects are singletons `{x_i}` sent to the given
/// carrier elements, with one label per consecutive pair.
pub fn chain_net(ctx: &Context, elements: &[&str], labels: &[&str]) -> Result<RelPKNet> {
    let shape = ThinCategory::ordinal(elements.len())?;
    let sets: Vec<FiniteSet> = (0..elements.len()).map(|i| FiniteSet::new([format!("x{i}")])).collect::<Result<_>>()?;
    let relations = shape
        .covers()
        .iter()
        .map(|&(a, b)| ((a, b), Relation::full(&sets[a], &sets[b])))
        .collect();
    let form = FormFunctor::new(&shape, sets.clone(), relations)?;
    let words: Vec<(String, &str)> = shape.covers().iter().map(|&c| shape.arrow_name(c)).zip(labels.iter().copied()).collect();
    let words: Vec<(&str, &str)> = words.iter().map(|(a, w)| (a.as_str(), *w)).collect();
    let labeling = Labeling::from_words(&shape, ctx, &words)?;
    let phi = elements
        .iter()
        .zip(&sets)
        .map(|(e, s)| Ok(Relation::from_pairs(s, ctx.carrier(), [(0, ctx.carrier_index(e)?)])))
        .collect::<Result<_>>()?;
    RelPKNet::new(shape, form, ctx.clone(), labeling, LaxNatTrans::new(phi))
}

/// The four-chord opening `DM -U-> Daug -U-> Gm -P-> GM` over `M_UPL`.
pub fn muse_net() -> RelPKNet {
    chain_net(&Context::preset(Preset::Upl), &["DM", "Daug", "Gm", "GM"], &["U", "U", "P"]).expect("valid net")
}

/// The repeating three-chord cell `DM -U-> Daug -U-> Gm`.
pub fn muse_cell_net() -> RelPKNet {
    chain_net(&Context::preset(Preset::Upl), &["DM", "Daug", "Gm"], &["U", "U"]).expect("valid net")
}

/// `N = id` on `M_UPL` and `ν` the transposition by five semitones at every
/// object, moving each cell of the progression to the next.
pub fn muse_homography(objects: usize) -> Homography {
    let ctx = Context::preset(Preset::Upl);
    Homography::uniform(MonoidMap::identity(Arc::clone(ctx.monoid())), ctx, chord_transposition(5), objects)
        .expect("valid homography")
}

/// The K-net `C -I4-> E -T3-> G` with the composite labelled `I7`.
pub fn k_net() -> RelPKNet {
    let ctx = Context::preset(Preset::Ti);
    let mut net = chain_net(&ctx, &["C", "E", "G"], &["I4", "T3"]).expect("valid net");
    net.labeling = Labeling::from_words(&net.shape, &ctx, &[("X0->X1", "I4"), ("X1->X2", "T3"), ("X0->X2", "I7")])
        .expect("valid labeling");
    net
}

fn indexed_set(prefix: &str, n: usize) -> FiniteSet {
    FiniteSet::new((1..=n).map(|i| format!("{prefix}{i}"))).expect("distinct labels")
}

fn diagonal(a: &FiniteSet, b: &FiniteSet, n: usize) -> Relation {
    Relation::from_pairs(a, b, (0..n).map(|i| (i, i)))
}

fn pc_component(ctx: &Context, set: &FiniteSet, pcs: &[&str]) -> Relation {
    Relation::from_pairs(set, ctx.carrier(), pcs.iter().enumerate().map(|(i, p)| (i, ctx.carrier_index(p).expect("pitch class"))))
}

/// The form of the dominant-seventh example: `x1..x4 -> y1..y3 -> z1..z4`,
/// `R(f)` and `R(g)` match indices 1..3, `R(h)` matches all four.
pub fn seventh_form() -> (ThinCategory, FormFunctor) {
    let shape = ThinCategory::from_covers(vec!["X".into(), "Y".into(), "Z".into()], vec![(0, 1), (1, 2)])
        .expect("valid shape");
    let (x, y, z) = (indexed_set("x", 4), indexed_set("y", 3), indexed_set("z", 4));
    let relations = BTreeMap::from([
        ((0, 1), diagonal(&x, &y, 3)),
        ((1, 2), diagonal(&y, &z, 3)),
        ((0, 2), diagonal(&x, &z, 4)),
    ]);
    let form = FormFunctor::new(&shape, vec![x, y, z], relations).expect("valid form");
    (shape, form)
}

/// A C7 chord inverted by `I3`, then `I5`, the whole being the `T2`
/// transposition onto D7.
pub fn seventh_net() -> RelPKNet {
    let ctx = Context::preset(Preset::Ti);
    let (shape, form) = seventh_form();
    let labeling =
        Labeling::from_words(&shape, &ctx, &[("X->Y", "I3"), ("Y->Z", "I5"), ("X->Z", "T2")]).expect("valid labeling");
    let phi = LaxNatTrans::new(vec![
        pc_component(&ctx, form.set(0), &["C", "E", "G", "Bb"]),
        pc_component(&ctx, form.set(1), &["Eb", "B", "Ab"]),
        pc_component(&ctx, form.set(2), &["D", "F#", "A", "C"]),
    ]);
    RelPKNet::new(shape, form, ctx, labeling, phi).expect("valid net")
}

/// The C major triad sent by `T4` onto the E major triad inside E7, with
/// function components throughout.
pub fn transposition_net() -> RelPKNet {
    let ctx = Context::preset(Preset::Ti);
    let shape = ThinCategory::ordinal(2).expect("valid shape");
    let (x, y) = (indexed_set("x", 3), indexed_set("y", 4));
    let form = FormFunctor::new(&shape, vec![x.clone(), y.clone()], BTreeMap::from([((0, 1), diagonal(&x, &y, 3))]))
        .expect("valid form");
    let labeling = Labeling::from_words(&shape, &ctx, &[("X0->X1", "T4")]).expect("valid labeling");
    let phi = LaxNatTrans::new(vec![
        pc_component(&ctx, &x, &["C", "E", "G"]),
        pc_component(&ctx, &y, &["E", "G#", "B", "D"]),
    ]);
    RelPKNet::new(shape, form, ctx, labeling, phi).expect("valid net")
}

/// Search input from E7 down to C major: `x_i -> y_i` for `i <= 3`, the
/// seventh `x4` having no image. No function form can realize it.
pub fn e7_to_c() -> (ThinCategory, FormFunctor, LaxNatTrans, Context) {
    let ctx = Context::preset(Preset::Ti);
    let shape = ThinCategory::ordinal(2).expect("valid shape");
    let (x, y) = (indexed_set("x", 4), indexed_set("y", 3));
    let form = FormFunctor::new(&shape, vec![x.clone(), y.clone()], BTreeMap::from([((0, 1), diagonal(&x, &y, 3))]))
        .expect("valid form");
    let phi = LaxNatTrans::new(vec![
        pc_component(&ctx, &x, &["E", "G#", "B", "D"]),
        pc_component(&ctx, &y, &["C", "E", "G"]),
    ]);
    (shape, form, phi, ctx)
}

/// Parses the Muse progression.
pub fn muse_chords() -> Vec<Chord> {
    MUSE_PROGRESSION.iter().map(|c| parse_chord(c).expect("valid chord")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pknet::{apply_homography, verify_pknet};

    #[test]
    fn gallery_nets_verify() {
        for net in [muse_net(), muse_cell_net(), k_net(), seventh_net(), transposition_net()] {
            let r = verify_pknet(&net).unwrap();
            assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn muse_cells() {
        let h = muse_homography(3);
        let mut net = muse_cell_net();
        let mut seen = Vec::new();
        for _ in 0..4 {
            seen.extend((0..3).flat_map(|x| net.phi_image(x)));
            net = apply_homography(&net, &h).unwrap();
        }
        let expected: Vec<String> =
            muse_chords().into_iter().map(crate::chords::format_chord).collect();
        assert_eq!(seen, expected);
    }
}
