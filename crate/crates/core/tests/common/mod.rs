#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use relpk::relcore::{FiniteSet, Relation};

pub const SEED: u64 = 0x5EED_2024;

pub fn config(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(SEED), failure_persistence: None, ..Config::default() }
}

pub fn set(prefix: &str, n: usize) -> FiniteSet {
    FiniteSet::new((0..n).map(|i| format!("{prefix}{i}"))).unwrap()
}

/// A random relation between the given sets.
pub fn relation(a: FiniteSet, b: FiniteSet) -> impl Strategy<Value = Relation> {
    proptest::collection::vec(any::<bool>(), a.len() * b.len()).prop_map(move |bits| {
        let m = b.len();
        Relation::from_pairs(&a, &b, bits.iter().enumerate().filter(|(_, &x)| x).map(|(k, _)| (k / m, k % m)))
    })
}

/// A random total function between the given sets.
pub fn function(a: FiniteSet, b: FiniteSet) -> impl Strategy<Value = Relation> {
    proptest::collection::vec(0..b.len(), a.len()).prop_map(move |img| Relation::from_fn(&a, &b, |i| img[i]))
}

pub fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}
