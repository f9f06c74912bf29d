mod common;

use std::collections::BTreeMap;
use std::sync::Arc;

use common::{config, function, relation, set};
use proptest::prelude::*;
use relpk::chords::{self, Chord};
use relpk::context::{Context, Preset};
use relpk::gallery::{self, chord_transposition};
use relpk::monoid::MonoidMap;
use relpk::pknet::*;
use relpk::relcore::Relation;

/// A chain of singletons `x_i -> c_i` labelled by `labels`, each `c_{i+1}`
/// picked from the image of `c_i` when possible.
fn chain(ctx: &Context, start: usize, labels: &[usize], picks: &[usize]) -> Option<RelPKNet> {
    let mut elems = vec![start];
    for (&g, &p) in labels.iter().zip(picks) {
        let image: Vec<usize> = ctx.relation(g).image_of(*elems.last().unwrap()).collect();
        if image.is_empty() {
            return None;
        }
        elems.push(image[p % image.len()]);
    }
    let names: Vec<String> = elems.iter().map(|&e| ctx.carrier().label(e).to_string()).collect();
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let words: Vec<String> = labels.iter().map(|&g| ctx.element_name(g)).collect();
    let words: Vec<&str> = words.iter().map(String::as_str).collect();
    Some(gallery::chain_net(ctx, &names, &words).unwrap())
}

fn chain_strategy(len: usize) -> impl Strategy<Value = (usize, usize, Vec<usize>, Vec<usize>, i64)> {
    (0usize..28, 1usize..4, proptest::collection::vec(0usize..40, len), proptest::collection::vec(0usize..8, len), 0i64..12)
        .prop_map(|(s, n, l, p, k)| (s, n, l, p, k))
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn upl_isographies_preserve_nets((start, n, labels, picks, k) in chain_strategy(3)) {
        let ctx = Context::preset(Preset::Upl);
        let labels: Vec<usize> = labels[..n].to_vec();
        let net = chain(&ctx, start, &labels, &picks);
        prop_assume!(net.is_some());
        let net = net.unwrap();
        prop_assert!(verify_pknet(&net).unwrap().passed());
        let h = Homography::uniform(MonoidMap::identity(Arc::clone(ctx.monoid())), ctx.clone(), chord_transposition(k), n + 1).unwrap();
        prop_assert!(h.is_isography());
        let moved = apply_homography(&net, &h).unwrap();
        prop_assert!(verify_pknet(&moved).unwrap().passed());
        prop_assert!(verify_homography(&net, &moved, &h).unwrap().passed());
    }

    #[test]
    fn ti_isographies_preserve_nets((start, n, labels, picks, k) in chain_strategy(3)) {
        let ctx = Context::preset(Preset::Ti);
        let labels: Vec<usize> = labels[..n].iter().map(|g| g % 24).collect();
        let net = chain(&ctx, start % 12, &labels, &picks).unwrap();
        prop_assert!(verify_pknet(&net).unwrap().passed());
        // conjugation by T_k: N(T) = T, N(I) = I_{2k}, ν = T_k
        let i2k = format!("I{}", (2 * k).rem_euclid(12));
        let hom = MonoidMap::from_words(Arc::clone(ctx.monoid()), Arc::clone(ctx.monoid()), &["T", ctx.resolve(&i2k).map(|g| ctx.monoid().word_string(g)).unwrap().as_str()]).unwrap();
        let h = Homography::uniform(hom, ctx.clone(), chords::transposition(k), n + 1).unwrap();
        prop_assert!(h.is_isography());
        let moved = apply_homography(&net, &h).unwrap();
        prop_assert!(verify_homography(&net, &moved, &h).unwrap().passed());
    }

    #[test]
    fn search_matches_filtered_enumeration(a in 0usize..28, b in 0usize..28, preset in 0usize..4) {
        let ctx = Context::preset([Preset::S, Preset::T, Preset::St, Preset::Upl][preset]);
        let names = [chords::format_chord(Chord::from_index(a)), chords::format_chord(Chord::from_index(b))];
        let base = gallery::chain_net(&ctx, &[&names[0], &names[1]], &["e"]).unwrap();
        let found = search_labelings(&base.shape, &base.form, &base.phi, &ctx, false).unwrap();
        let expected: Vec<usize> = (0..ctx.len()).filter(|&g| {
            let mut net = base.clone();
            net.labeling = Labeling::new(&net.shape, &ctx, BTreeMap::from([((0, 1), g)])).unwrap();
            verify_pknet(&net).unwrap().passed()
        }).collect();
        let got: Vec<usize> = found.iter().map(|l| l.declared()[&(0, 1)]).collect();
        prop_assert_eq!(&got, &expected);
        prop_assert_eq!(got, ctx.monoid().relating(a, b));
    }

    #[test]
    fn functional_and_relational_verdicts_agree(
        (f, px, py) in (1usize..4, 1usize..4).prop_flat_map(|(m, n)| {
            let (x, y, z) = (set("x", m), set("y", n), chords::z12().clone());
            (function(x.clone(), y.clone()), function(x, z.clone()), function(y, z))
        }),
        g in 0usize..24,
    ) {
        let ctx = Context::preset(Preset::Ti);
        let shape = ThinCategory::ordinal(2).unwrap();
        let form = FormFunctor::new(&shape, vec![f.source().clone(), f.target().clone()], BTreeMap::from([((0, 1), f)])).unwrap();
        let lab = Labeling::new(&shape, &ctx, BTreeMap::from([((0, 1), g)])).unwrap();
        let net = RelPKNet::new(shape, form, ctx, lab, LaxNatTrans::new(vec![px, py])).unwrap();
        prop_assert_eq!(verify_pknet(&net).unwrap().passed(), verify_functional(&net).unwrap().passed());
    }

    #[test]
    fn homography_inclusion_is_a_partial_order(
        rels in proptest::collection::vec(relation(chords::z12().clone(), chords::z12().clone()), 3),
    ) {
        let ctx = Context::preset(Preset::Ti);
        let id = MonoidMap::identity(Arc::clone(ctx.monoid()));
        let hs: Vec<Homography> = rels.iter().map(|r| Homography::uniform(id.clone(), ctx.clone(), r.clone(), 2).unwrap()).collect();
        let inc = |a: &Homography, b: &Homography| homography_included(a, b).unwrap();
        for a in &hs {
            prop_assert!(inc(a, a));
            for b in &hs {
                if inc(a, b) && inc(b, a) {
                    prop_assert_eq!(&a.nu, &b.nu);
                }
                for c in &hs {
                    if inc(a, b) && inc(b, c) {
                        prop_assert!(inc(a, c));
                    }
                }
            }
        }
        let union = rels[0].union(&rels[1]).unwrap();
        let hu = Homography::uniform(id, ctx, union, 2).unwrap();
        prop_assert!(inc(&hs[0], &hu) && inc(&hs[1], &hu));
    }
}

#[test]
fn transposition_example_agrees_in_both_settings() {
    let net = gallery::transposition_net();
    assert!(verify_pknet(&net).unwrap().passed());
    assert!(verify_functional(&net).unwrap().passed());
}

#[test]
fn strict_subrelation_inclusion() {
    let ctx = Context::preset(Preset::Ti);
    let id = MonoidMap::identity(Arc::clone(ctx.monoid()));
    let full = Relation::full(chords::z12(), chords::z12());
    let small = Relation::identity(chords::z12());
    let h1 = Homography::uniform(id.clone(), ctx.clone(), small, 2).unwrap();
    let h2 = Homography::uniform(id, ctx, full, 2).unwrap();
    assert!(homography_included(&h1, &h2).unwrap());
    assert!(!homography_included(&h2, &h1).unwrap());
    assert!(!h2.is_isography());
}
