use ramseylab::constructions::{
    balanced_rpartite, k43e_from_graph, random_cover, stepping_up, stepping_up_color_count,
    two_pentagon_coloring, CoverSpec, SteppingUpInput,
};
use ramseylab::search::SearchStatus;
use ramseylab::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random triangle-free k-coloring of K_n: edges in random order, each takes
/// a random color that closes no monochromatic triangle; restart on a dead end.
fn random_triangle_free(n: usize, k: u16, rng: &mut ChaCha8Rng) -> Coloring {
    let pairs: Vec<[u32; 2]> = (0..n as u32)
        .flat_map(|j| (0..j).map(move |i| [i, j]))
        .collect();
    'restart: loop {
        let mut c = Coloring::unassigned(2, n, k).unwrap();
        let mut order = pairs.clone();
        order.shuffle(rng);
        for [a, b] in order {
            let mut options: Vec<u16> = (0..k)
                .filter(|&col| {
                    (0..n as u32).filter(|&x| x != a && x != b).all(|x| {
                        let ax = c.get(&sort2(a, x));
                        let bx = c.get(&sort2(b, x));
                        !(ax == Some(col) && bx == Some(col))
                    })
                })
                .collect();
            if options.is_empty() {
                continue 'restart;
            }
            options.shuffle(rng);
            c.set(&[a, b], options[0]).unwrap();
        }
        return c;
    }
}

fn sort2(a: u32, b: u32) -> [u32; 2] {
    [a.min(b), a.max(b)]
}

#[test]
fn k43e_lift_of_random_three_colorings() {
    let mut rng = ChaCha8Rng::seed_from_u64(500);
    let p = pattern_catalog("K43e", &[]).unwrap();
    for _ in 0..500 {
        let phi = random_triangle_free(8, 3, &mut rng);
        let psi = k43e_from_graph(&phi).unwrap();
        assert_eq!(psi.k(), 12);
        assert!(find_mono_copy(&psi, &p).unwrap().is_none());
    }
}

#[test]
fn stepping_up_color_budget() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 2..=5 {
        for k in 1..=3u16 {
            let colors = (0..binomial(n as u64, 2))
                .map(|_| rng.gen_range(0..k))
                .collect();
            let phi = Coloring::from_colors(2, n, k, colors).unwrap();
            let psi = stepping_up(&SteppingUpInput { phi }).unwrap();
            assert!(psi.used_colors().len() as u32 <= stepping_up_color_count(2, k));
            assert!(psi.is_total());
        }
    }
}

#[test]
fn stepping_up_from_triples() {
    // a 2-coloring of K_5^3 without a monochromatic K_4^3 lifts to one of
    // K_32^4 without a monochromatic K_5^4
    let k4 = pattern_catalog("clique", &[4, 3]).unwrap();
    let out = exists_good_coloring(&k4, 2, 5, 1_000_000).unwrap();
    assert_eq!(out.status, SearchStatus::Found);
    let phi = out.certificate.unwrap();
    let psi = stepping_up(&SteppingUpInput { phi }).unwrap();
    assert_eq!((psi.r(), psi.n()), (4, 32));
    assert!(psi.used_colors().len() as u32 <= stepping_up_color_count(3, 2));
    let k5 = pattern_catalog("clique", &[5, 4]).unwrap();
    assert!(find_mono_copy(&psi, &k5).unwrap().is_none());
}

#[test]
fn random_cover_of_k9_by_tripartite_copies() {
    let base = balanced_rpartite(9, 3).unwrap();
    assert_eq!(base.edge_count(), 27);
    let k4 = pattern_catalog("clique", &[4, 3]).unwrap();
    assert!(contains_copy(&base, &k4).unwrap().is_none());
    let spec = CoverSpec {
        base,
        k: 40,
        seed: 2024,
        max_retries: 0,
    };
    let out = random_cover(&spec)
        .unwrap()
        .expect("seed 2024 covers K_9^3 on the first attempt");
    assert_eq!(out.attempt, 0);
    for color in 0..40 {
        assert!(contains_copy(&out.coloring.color_class(color), &k4)
            .unwrap()
            .is_none());
    }
}

#[test]
fn random_cover_single_edge_fails() {
    let base = UniformHypergraph::from_edges(3, 5, [[0u32, 1, 2]]).unwrap();
    let spec = CoverSpec {
        base,
        k: 1,
        seed: 1,
        max_retries: 10,
    };
    assert!(random_cover(&spec).unwrap().is_none());
}

#[test]
fn pentagon_lift_has_eight_colors() {
    let psi = k43e_from_graph(&two_pentagon_coloring()).unwrap();
    assert_eq!(psi.k(), 8);
    assert!(psi.used_colors().len() <= 8);
}
