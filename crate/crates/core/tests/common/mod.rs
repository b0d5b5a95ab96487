//! Shared corpus and random regular graphs for the integration tests.
#![allow(dead_code)]

use rand::SeedableRng;
use rand::seq::{IndexedRandom, SliceRandom};
use rand_chacha::ChaCha8Rng;
use rotmap::adjacency::adjacency_from_rotation;
use rotmap::{AdjacencyMatrix, FamilySpec, RotationMatrix};

/// Every family member in the test pool: cycles 3..=12, complete 3..=8,
/// K(n,n) 2..=6, GP(n,s) with n <= 9, hypercubes 1..=3.
pub fn family_pool() -> Vec<FamilySpec> {
    let mut pool = Vec::new();
    pool.extend((3..=12).map(|n| FamilySpec::Cycle { n }));
    pool.extend((3..=8).map(|n| FamilySpec::Complete { n }));
    pool.extend((2..=6).map(|n| FamilySpec::CompleteBipartite { n }));
    for n in 3..=9 {
        pool.extend((1..=(n - 1) / 2).map(|s| FamilySpec::GeneralizedPetersen { n, s }));
    }
    pool.extend((1..=3).map(|dimension| FamilySpec::Hypercube { dimension }));
    pool
}

pub fn build(spec: FamilySpec) -> RotationMatrix {
    spec.build().unwrap_or_else(|e| panic!("{spec}: {e}"))
}

pub fn adjacency(r: &RotationMatrix) -> AdjacencyMatrix {
    adjacency_from_rotation(r).unwrap()
}

/// The family pool as `(name, adjacency)` pairs.
pub fn corpus() -> Vec<(String, AdjacencyMatrix)> {
    family_pool()
        .into_iter()
        .map(|spec| (spec.to_string(), adjacency(&build(spec))))
        .collect()
}

/// `count` seeded pairs drawn with replacement from the family pool.
pub fn seeded_pairs(seed: u64, count: usize) -> Vec<(FamilySpec, FamilySpec)> {
    let pool = family_pool();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (*pool.choose(&mut rng).unwrap(), *pool.choose(&mut rng).unwrap()))
        .collect()
}

/// Random simple `d`-regular graph on `n` vertices from the pairing model:
/// shuffle `n*d` half-edges, pair them up, and retry on loops or multi-edges.
pub fn random_regular(n: usize, d: usize, seed: u64) -> AdjacencyMatrix {
    assert!(d < n && (n * d).is_multiple_of(2), "no simple {d}-regular graph on {n} vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (1..=n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    'attempt: loop {
        points.shuffle(&mut rng);
        let mut entries = vec![0u8; n * n];
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0] - 1, pair[1] - 1);
            if u == v || entries[u * n + v] == 1 {
                continue 'attempt;
            }
            entries[u * n + v] = 1;
            entries[v * n + u] = 1;
        }
        return AdjacencyMatrix::new(n, entries).unwrap();
    }
}

/// `(n, d, seed)` for the 20 seeded random graphs used by the solver checks.
pub fn random_graph_params() -> Vec<(usize, usize, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let mut params = Vec::new();
    for k in 0..20u64 {
        let d = [3, 4, 5][(k % 3) as usize];
        let sizes: Vec<usize> = (d + 1..=24).filter(|n| n * d % 2 == 0).collect();
        let n = *sizes.choose(&mut rng).unwrap();
        params.push((n, d, 1000 + k));
    }
    params
}
