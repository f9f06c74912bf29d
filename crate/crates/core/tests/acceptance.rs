//! Acceptance suite: one line per criterion, non-zero exit on any failure.
//! Runs under `cargo test` with its own harness so the lines always print.

use std::collections::HashSet;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use relpk::chords::{
    format_chord, named_relation, parse_chord, pmn_related, pmn_relation, Chord, NamedRelation, ParsimoniousGraph,
    Quality,
};
use relpk::context::{Context, Preset};
use relpk::gallery::{self, chord_transposition};
use relpk::groth::{from_faithful, grothendieck, is_faithful, lift_morphism, DiagramMorphism};
use relpk::monoid::{automorphisms, composition_table, isomorphic_tables, GeneratorSet, MonoidMap, MulTable, RelMonoid};
use relpk::pknet::{apply_homography, search_labelings, verify_pknet};
use relpk::relcore::{FiniteSet, Relation};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn upl() -> Context {
    Context::preset(Preset::Upl)
}

fn elements(ctx: &Context, words: &[&str]) -> Result<HashSet<usize>, String> {
    words.iter().map(|w| ctx.resolve(w).map_err(|e| e.to_string())).collect()
}

fn closure_size() -> Outcome {
    let n = upl().len();
    ensure(n == 40, format!("M_UPL has {n} elements"))?;
    Ok("|M_UPL| = 40".into())
}

fn relators() -> Outcome {
    let ctx = upl();
    let rep = ctx.check_presentation(Preset::Upl.relators()).map_err(|e| e.to_string())?;
    if let Some(bad) = rep.relators.iter().find(|r| !r.holds) {
        return Err(format!("{} = {} fails", bad.lhs, bad.rhs));
    }
    let false_one = ctx.monoid().check_relator("U^2", "e").map_err(|e| e.to_string())?;
    ensure(!false_one, "U^2 = e unexpectedly holds")?;
    Ok(format!("{} relator equations hold (P^2 = L^2 = e split in two); U^2 = e fails", rep.relators.len()))
}

fn units() -> Outcome {
    let ctx = upl();
    let u = ctx.monoid().units();
    let got: HashSet<usize> = u.members.iter().copied().collect();
    ensure(got == elements(&ctx, &["e", "L", "P", "LP", "PL", "LPL"])?, "unit set differs")?;
    ensure(isomorphic_tables(&u.table, &MulTable::dihedral(6)).is_some(), "units are not dihedral of order 6")?;
    Ok("units {e, L, P, LP, PL, LPL} ≅ D6".into())
}

fn automorphism_group() -> Outcome {
    let ctx = upl();
    let m = ctx.monoid();
    let auts = automorphisms(m);
    ensure(auts.len() == 12, format!("{} automorphisms", auts.len()))?;
    let table = composition_table(&auts).map_err(|e| e.to_string())?;
    let target = MulTable::dihedral(6).direct_product(&MulTable::cyclic(2));
    let witness = isomorphic_tables(&table, &target).ok_or("Aut is not D6 x Z2")?;
    ensure(witness.iter().collect::<HashSet<_>>().len() == 12, "witness is not bijective")?;
    let (u, p, l) = (ctx.resolve("U").unwrap(), ctx.resolve("P").unwrap(), ctx.resolve("L").unwrap());
    let allowed = elements(&ctx, &["U", "PUP"])?;
    let images: HashSet<usize> =
        auts.iter().filter(|f| f.apply(p) == p && f.apply(l) == l).map(|f| f.apply(u)).collect();
    ensure(images == allowed, "automorphisms fixing L and P move U outside {U, PUP}")?;
    Ok("|Aut(M_UPL)| = 12 ≅ D6 x Z2; fixing L, P: U -> U or PUP".into())
}

fn small_monoids() -> Outcome {
    let s = Context::preset(Preset::S);
    let m = s.monoid();
    ensure(m.check_relator("S^7", "S^5").unwrap() && !m.check_relator("S^6", "S^5").unwrap(), "S relators")?;
    ensure(s.len() == 7, format!("|M_S| = {}", s.len()))?;
    let t = Context::preset(Preset::T);
    ensure(t.monoid().check_relator("T^4", "T^3").unwrap() && t.len() == 4, "M_T")?;
    let st = Context::preset(Preset::St);
    let rep = st.check_presentation(Preset::St.relators()).map_err(|e| e.to_string())?;
    ensure(rep.all_hold() && rep.relators.len() == 5 && st.len() == 8, "M_ST")?;
    Ok("|M_S| = 7, |M_T| = 4, |M_ST| = 8 with all relators".into())
}

fn oracle_equivalence() -> Outcome {
    for (name, m, n) in [(NamedRelation::S, 1, 0), (NamedRelation::T, 2, 0)] {
        let named = named_relation(name);
        ensure(named == pmn_relation(m, n), format!("{name:?} differs from P({m},{n})"))?;
        for a in Chord::all() {
            for b in Chord::all() {
                let oracle = pmn_related(&a.pc_set(), &b.pc_set(), m, n).map_err(|e| e.to_string())?;
                ensure(
                    named.contains(a.index(), b.index()) == oracle,
                    format!("{name:?} disagrees with the bijection oracle at ({a}, {b})"),
                )?;
            }
        }
    }
    Ok("S = P(1,0), T = P(2,0) entrywise against the bijection oracle".into())
}

fn graphs() -> Outcome {
    let cd = ParsimoniousGraph::cube_dance();
    ensure(cd.vertex_count() == 28 && cd.edges().len() == 48, "Cube Dance size")?;
    for c in Chord::all() {
        let want = if c.quality() == Quality::Augmented { 6 } else { 3 };
        ensure(cd.degree(c) == want, format!("Cube Dance degree of {c}"))?;
    }
    let cycles = cd.hexacycles().map_err(|e| e.to_string())?;
    ensure(cycles.len() == 4 && cycles.iter().all(|c| c.len() == 6), "HexaCycles")?;
    let covered: HashSet<Chord> = cycles.iter().flatten().copied().collect();
    ensure(covered.len() == 24, "HexaCycles do not partition the triads")?;
    let w = ParsimoniousGraph::weitzmann();
    ensure(w.edges().len() == 72, "Weitzmann edge count")?;
    for c in Chord::all() {
        let want = if c.quality() == Quality::Augmented { 6 } else { 5 };
        ensure(w.degree(c) == want, format!("Weitzmann degree of {c}"))?;
    }
    Ok("Cube Dance 28/48, degrees 3/6, 4 HexaCycles; Weitzmann 72 edges, degrees 5/6".into())
}

fn relate_and_distance() -> Outcome {
    let s = Context::preset(Preset::S);
    let got: HashSet<usize> = s.relate("AM", "F#M").unwrap().into_iter().collect();
    ensure(got == elements(&s, &["S^3", "S^5"])?, "M_S relate")?;
    let st = Context::preset(Preset::St);
    let got: HashSet<usize> = st.relate("AM", "F#M").unwrap().into_iter().collect();
    ensure(got == elements(&st, &["TS", "ST^2"])?, "M_ST relate")?;
    let (d, path) = ParsimoniousGraph::cube_dance()
        .distance(parse_chord("AM").unwrap(), parse_chord("F#M").unwrap())
        .ok_or("unreachable")?;
    let names: Vec<String> = path.into_iter().map(format_chord).collect();
    ensure(d == 3 && names == ["AM", "Faug", "Bbm", "F#M"], format!("distance {d} via {names:?}"))?;
    Ok("relate = {S^3, S^5} and {TS, ST^2}; distance 3 via Faug, Bbm".into())
}

fn muse() -> Outcome {
    let report = verify_pknet(&gallery::muse_net()).map_err(|e| e.to_string())?;
    ensure(report.passed(), "Muse ordinal-4 net fails")?;
    let h = gallery::muse_homography(3);
    ensure(h.is_isography(), "Muse homography is not an isography")?;
    let mut net = gallery::muse_cell_net();
    let mut seen = Vec::new();
    for step in 0..4 {
        if step > 0 {
            net = apply_homography(&net, &h).map_err(|e| e.to_string())?;
        }
        seen.extend((0..3).flat_map(|x| net.phi_image(x)));
    }
    let expected: Vec<String> = gallery::muse_chords().into_iter().map(format_chord).collect();
    ensure(seen == expected, format!("sequence {seen:?}"))?;
    let caug = parse_chord("Caug").unwrap().pc_set();
    let values: Vec<u8> = caug.members().iter().map(|p| p.value()).collect();
    ensure(values == [0, 4, 8] && format_chord(parse_chord("Caug").unwrap()) == "Abaug", "Caug spelling")?;
    Ok(format!("Muse net verifies; isography iterates to {}", seen.join(" ")))
}

fn ti_nets() -> Outcome {
    let ti = Context::preset(Preset::Ti);
    ensure(ti.len() == 24, "T/I group size")?;
    let (i4, t3, i7) = (ti.resolve("I4").unwrap(), ti.resolve("T3").unwrap(), ti.resolve("I7").unwrap());
    ensure(ti.monoid().mul(i4, t3) == i7, "T3 after I4 is not I7")?;
    for (name, net) in [("K-net", gallery::k_net()), ("seventh-chord net", gallery::seventh_net())] {
        let r = verify_pknet(&net).map_err(|e| e.to_string())?;
        ensure(r.passed(), format!("{name} fails"))?;
    }
    Ok("K-net (I4, T3, I7) and seventh-chord net verify; |T/I| = 24".into())
}

fn negative_result() -> Outcome {
    let (shape, form, phi, ctx) = gallery::e7_to_c();
    let functional = search_labelings(&shape, &form, &phi, &ctx, true).map_err(|e| e.to_string())?;
    ensure(functional.is_empty(), "a functional labeling exists")?;
    let relational = search_labelings(&shape, &form, &phi, &ctx, false).map_err(|e| e.to_string())?;
    let names: Vec<String> = relational.iter().map(|l| ctx.element_name(l.declared()[&(0, 1)])).collect();
    ensure(names.iter().any(|n| n == "T8"), "T8 is not among the relational labelings")?;
    Ok(format!("functional search empty; relational labelings: {}", names.join(", ")))
}

fn grothendieck_round_trip() -> Outcome {
    let mut counts = Vec::new();
    for p in Preset::ALL {
        let ctx = Context::preset(p);
        let (h, proj) = grothendieck(&ctx).map_err(|e| e.to_string())?;
        ensure(is_faithful(&proj), format!("h(S) not faithful for {p}"))?;
        ensure(h.full_audit().passed(), format!("H(S) audit fails for {p}"))?;
        let (carrier, rels) = from_faithful(&proj).map_err(|e| e.to_string())?;
        ensure(&carrier == ctx.carrier() && rels == ctx.monoid().elements(), format!("round trip fails for {p}"))?;
        counts.push(format!("{p}:{}", h.morphism_count()));
    }
    let ctx = upl();
    let d = DiagramMorphism { l: MonoidMap::identity(Arc::clone(ctx.monoid())), lambda: chord_transposition(5) };
    let lift = lift_morphism(&d, &ctx, &ctx).map_err(|e| e.to_string())?;
    let rotation: Vec<usize> = (0..28).map(|i| Chord::from_index(i).transpose(5).index()).collect();
    ensure(lift.object_map == rotation, "lift does not rotate objects")?;
    let (_, proj) = grothendieck(&ctx).unwrap();
    let square = (0..lift.source.morphism_count())
        .all(|f| proj.morphism_map[lift.morphism_map[f]] == d.l.apply(proj.morphism_map[f]));
    ensure(square, "commutative square fails")?;
    Ok(format!("round trip, faithfulness and audit for all presets ({}); Muse lift commutes", counts.join(" ")))
}

fn random_relation(rng: &mut ChaCha8Rng, a: &FiniteSet, b: &FiniteSet) -> Relation {
    let p = rng.gen_range(0.1..0.7);
    let pairs: Vec<(usize, usize)> =
        (0..a.len()).flat_map(|i| (0..b.len()).map(move |j| (i, j))).filter(|_| rng.gen_bool(p)).collect();
    Relation::from_pairs(a, b, pairs)
}

fn properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_2024);
    let sets: Vec<FiniteSet> =
        (1..=5).map(|n| FiniteSet::new((0..n).map(|i| format!("v{i}"))).unwrap()).collect();
    for _ in 0..200 {
        let pick = |rng: &mut ChaCha8Rng| sets[rng.gen_range(0..sets.len())].clone();
        let (a, b, c, d) = (pick(&mut rng), pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let (r, s, t) = (random_relation(&mut rng, &a, &b), random_relation(&mut rng, &b, &c), random_relation(&mut rng, &c, &d));
        let lhs = r.compose(&s).unwrap().compose(&t).unwrap();
        ensure(lhs == r.compose(&s.compose(&t).unwrap()).unwrap(), "compose is not associative")?;
        let sub = r.intersection(&random_relation(&mut rng, &a, &b)).unwrap();
        ensure(sub.compose(&s).unwrap().included_in(&r.compose(&s).unwrap()).unwrap(), "inclusion not monotone")?;
    }
    for _ in 0..60 {
        let carrier = sets[rng.gen_range(0..3)].clone();
        let names = ["A", "B", "C"];
        let mut rels: Vec<Relation> =
            (0..rng.gen_range(1..=3)).map(|_| random_relation(&mut rng, &carrier, &carrier)).collect();
        let gs = GeneratorSet::new(carrier.clone(), names.iter().copied().zip(rels.clone()).collect()).unwrap();
        let m = RelMonoid::generate(&gs);
        for i in 0..m.len() {
            ensure(&gs.evaluate_word(m.word(i)) == m.element(i), "canonical word mismatch")?;
        }
        rels.shuffle(&mut rng);
        let shuffled = GeneratorSet::new(carrier, names.iter().copied().zip(rels).collect()).unwrap();
        let m2 = RelMonoid::generate(&shuffled);
        let e1: HashSet<&Relation> = m.elements().iter().collect();
        let e2: HashSet<&Relation> = m2.elements().iter().collect();
        ensure(e1 == e2, "closure depends on generator order")?;
    }
    let invocations: [&[&str]; 3] = [
        &["relpk", "monoid", "upl", "--automorphisms", "--units", "--json"],
        &["relpk", "graph", "cube-dance", "--dot"],
        &["relpk", "--json", "groth", "--context", "st"],
    ];
    for args in invocations {
        let (a, b) = (relpk::cli::run(args.iter().copied()), relpk::cli::run(args.iter().copied()));
        ensure(a == b && a.code == 0, format!("{args:?} is not deterministic"))?;
    }
    Ok("compose associativity, inclusion monotonicity, closure order independence, canonical words, CLI determinism (seed 0x5EED2024)".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("M_UPL closure size", closure_size),
        ("M_UPL relators", relators),
        ("units of M_UPL", units),
        ("automorphisms of M_UPL", automorphism_group),
        ("M_S, M_T, M_ST", small_monoids),
        ("S and T against the P(m,n) oracle", oracle_equivalence),
        ("Cube Dance and Weitzmann graphs", graphs),
        ("relate and Cube Dance distance", relate_and_distance),
        ("Muse net and isography", muse),
        ("T/I nets", ti_nets),
        ("functional vs relational search", negative_result),
        ("Grothendieck correspondence", grothendieck_round_trip),
        ("property suites", properties),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match result {
            Ok(detail) => println!("[PASS] {:>2}. {name}: {detail} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {:>2}. {name}: {why} ({ms} ms)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
