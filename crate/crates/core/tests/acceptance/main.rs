//! Acceptance suite. Every criterion prints one pass/fail line
//! (`cargo test --test acceptance -- --nocapture` to see them) and checks its
//! inequalities in exact arithmetic with zero tolerance.

mod oracles;
mod support;

use num::{BigInt, BigRational, BigUint, One, Zero};
use rand::Rng;
use smalldense::counting::{self, DEFAULT_CAP};
use smalldense::exponent::erdos_renyi_exponent;
use smalldense::extraction::{
    certify, extract, ExtractMode, ExtractParams, ExtractResult, Witness,
};
use smalldense::generate::{generate, GraphKind};
use smalldense::goodness::{classify_goodness, goodness_mass_check, level_sums_within_bound};
use smalldense::graph::{Graph, Radius};
use smalldense::regularization::{regularize, threshold_ratio};
use smalldense::rng::seeded_rng;
use smalldense::splitting::{greedy_hypergraph_matching, spanning_selection, Hypergraph};
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::time::Instant;

fn criterion<F: FnOnce() -> String>(number: u32, name: &str, body: F) {
    let start = Instant::now();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(detail) => {
            println!(
                "criterion {number:2} ({name}): PASS [{detail}] in {:.1}s",
                start.elapsed().as_secs_f64()
            );
        }
        Err(err) => {
            println!("criterion {number:2} ({name}): FAIL");
            resume_unwind(err);
        }
    }
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

#[test]
fn criterion_01_oracle_equivalence() {
    criterion(1, "oracle equivalence", || {
        let ps = [0.2, 0.5, 0.8];
        let mut graphs: Vec<(Graph, bool)> = Vec::new();
        let mut seed = 1000;
        for n in 4..=10usize {
            for &p in &ps {
                for _ in 0..6 {
                    graphs.push((generate(GraphKind::Gnp { n, p }, seed).unwrap(), false));
                    seed += 1;
                }
            }
        }
        for (a, b) in [(3u32, 3u32), (4, 4), (5, 5), (4, 3)] {
            for &p in &ps {
                for _ in 0..7 {
                    graphs.push((support::random_bipartite(a, b, p, seed), true));
                    seed += 1;
                }
            }
        }
        assert!(graphs.len() >= 200);

        for (g, bipartite) in &graphs {
            for t in 2..=3u32 {
                assert_eq!(
                    counting::count_stars(g, t),
                    big(oracles::stars(g, t as usize)),
                    "stars t={t}"
                );
                assert_eq!(
                    counting::count_bicliques(g, t, DEFAULT_CAP).unwrap().count,
                    big(oracles::bicliques(g, t as usize)),
                    "bicliques t={t}"
                );
            }
            for t in 1..=3u32 {
                assert_eq!(
                    counting::count_t_matchings(g, t).unwrap().count,
                    big(oracles::t_matchings(g, t as usize)),
                    "matchings t={t}"
                );
                let (pn, pe) = oracles::spider_pattern(t);
                assert_eq!(
                    counting::count_spiders(g, t).unwrap(),
                    big(oracles::copies_of_pattern(pn, &pe, g)),
                    "spiders t={t}"
                );
            }
            for (s, t) in [(1u32, 1u32), (2, 2)] {
                let (pn, pe) = oracles::hst_pattern(s, t);
                assert_eq!(
                    counting::count_hst(g, s, t, DEFAULT_CAP).unwrap(),
                    big(oracles::copies_of_pattern(pn, &pe, g)),
                    "h_st ({s},{t})"
                );
            }
            if *bipartite {
                let (wa, wb, s) = counting::count_cherries_and_c4(g).unwrap();
                let (owa, owb, os) = oracles::cherries_and_c4(g);
                assert_eq!((wa, wb, s), (big(owa), big(owb), big(os)), "cherries");
                assert_eq!(counting::count_c4(g), big(oracles::c4(g)), "c4");
                for t in 1..=2u32 {
                    let (copies, inc) = counting::count_h1t(g, t, DEFAULT_CAP).unwrap();
                    assert_eq!(
                        inc,
                        big(oracles::h1t_incidences(g, t as usize)),
                        "h1t t={t}"
                    );
                    let (pn, pe) = oracles::hst_pattern(1, t);
                    assert_eq!(
                        copies,
                        big(oracles::copies_of_pattern(pn, &pe, g)),
                        "h1t copies t={t}"
                    );
                }
            }
        }
        format!("{} graphs, all counters exact", graphs.len())
    });
}

#[test]
fn criterion_02_goodness_mass_suite() {
    criterion(2, "goodness degree-mass bounds", || {
        let mut checked = 0;
        let mut seed = 5000;
        while checked < 500 {
            let n = 5 + (seed as usize % 26); // 5..=30
            let p = [0.15, 0.3, 0.5, 0.8][seed as usize % 4];
            let g = generate(GraphKind::Gnp { n, p }, seed).unwrap();
            seed += 1;
            checked += 1;
            for h in 1..=3u32 {
                let mc = goodness_mass_check(&g, h).unwrap();
                // bad <= (2/3)e and good >= (4/3)e, in integers
                assert!(
                    &mc.bad_sum * big(3) <= big(2 * g.m() as u64),
                    "bad mass, h={h}"
                );
                assert!(
                    &mc.good_sum * big(3) >= big(4 * g.m() as u64),
                    "good mass, h={h}"
                );
                assert!(mc.passes);
                let table = classify_goodness(&g, h).unwrap();
                assert!(level_sums_within_bound(&table, g.m()), "level sums, h={h}");
                // the per-level sums, recomputed directly
                for i in 1..=h {
                    let s_i: u64 = (0..g.n())
                        .filter(|&v| !table.is_good(v, i))
                        .map(|v| g.degree(v as u32) as u64)
                        .sum();
                    assert!(big(s_i) * BigUint::from(3u32).pow(h - i + 1) <= big(2 * g.m() as u64));
                }
                // nesting
                for v in 0..g.n() {
                    for i in 2..=h {
                        if table.is_good(v, i) {
                            assert!(table.is_good(v, i - 1), "nesting v={v} i={i}");
                        }
                    }
                }
            }
        }
        format!("{checked} graphs, h in 1..=3, zero violations")
    });
}

#[test]
fn criterion_03_biclique_supersaturation() {
    criterion(3, "biclique count vs supersaturation bound", || {
        let k25 = generate(GraphKind::Complete { n: 25 }, 0).unwrap();
        let rep = counting::count_bicliques(&k25, 2, DEFAULT_CAP).unwrap();
        assert_eq!(rep.count, big(37950));
        assert_eq!(
            rep.bound.clone().unwrap(),
            BigRational::from_integer(2592.into())
        );
        assert!(rep.hypotheses_met && rep.count_meets_bound());

        let mut tested = 1;
        let mut seed = 7000;
        while tested < 11 {
            // near-complete: drop a few random edges from K25, keep E >= 250
            let mut edges = k25.edges();
            let mut rng = seeded_rng(seed);
            seed += 1;
            let drop = rng.gen_range(0..=50usize);
            for i in 0..drop {
                let j = rng.gen_range(i..edges.len());
                edges.swap(i, j);
            }
            let g = Graph::new(25, &edges[drop..]).unwrap();
            if g.m() < 250 {
                continue;
            }
            let rep = counting::count_bicliques(&g, 2, DEFAULT_CAP).unwrap();
            assert!(rep.hypotheses_met, "E = {} >= 250 and n = 25 >= 4", g.m());
            assert!(rep.count_meets_bound(), "count {} vs bound", rep.count);
            tested += 1;
        }
        format!("{tested} graphs with E >= 250, count >= E^4/(8*25^4)")
    });
}

#[test]
fn criterion_04_cherry_c4_inequalities() {
    criterion(4, "cherry and C4 convexity bounds", || {
        for k in 0..50u64 {
            let m = 90 + (k as usize % 11); // E in [90, 100]
            let g = support::random_bipartite_gnm(10, 10, m, 9000 + k);
            let e = g.m() as u64;
            assert!(big(e).pow(2) >= big(20).pow(3), "hypothesis E >= n^(3/2)");
            let (wa, wb, s) = counting::count_cherries_and_c4(&g).unwrap();
            let (a_len, b_len) = (10u64, 10u64);
            assert!(&wa * big(4 * a_len) >= big(e).pow(2), "W_A >= E^2/(4|A|)");
            assert!(&wb * big(4 * b_len) >= big(e).pow(2), "W_B >= E^2/(4|B|)");
            assert!(
                &s * big(2 * b_len * b_len) >= wa.pow(2),
                "S >= W_A^2/(2|B|^2)"
            );
            assert!(
                &s * big(2 * a_len * a_len) >= wb.pow(2),
                "S >= W_B^2/(2|A|^2)"
            );
            assert!(
                &s * big(32 * a_len * a_len * b_len * b_len) >= big(e).pow(4),
                "S >= E^4/(32|A|^2|B|^2)"
            );
        }
        "50 bipartite graphs, all five inequalities exact".into()
    });
}

#[test]
fn criterion_05_greedy_guarantees() {
    criterion(5, "hypergraph matching and spanning selection", || {
        let mut rng = seeded_rng(42);
        let mut graphs_checked = 0u64;
        for t in 2..=3u32 {
            for n in (t as usize + 1)..=6 {
                let base = oracles::combinations(n, t as usize);
                let space: u64 = 1 << base.len();
                let masks: Vec<u64> = if space <= 10_000 {
                    (1..space).collect()
                } else {
                    (0..10_000).map(|_| rng.gen_range(1..space)).collect()
                };
                for mask in masks {
                    let edges: Vec<Vec<u32>> = base
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, e)| e.clone())
                        .collect();
                    let e = edges.len() as u64;
                    let h = Hypergraph::new(n, t, edges.clone()).unwrap();
                    let d = h.max_vertex_load() as u64;
                    let matching = greedy_hypergraph_matching(&h);
                    assert!(
                        matching.len() as u64 >= e.div_ceil(t as u64 * d),
                        "matching floor: {} < ceil({e}/{})",
                        matching.len(),
                        t as u64 * d
                    );
                    graphs_checked += 1;
                    for m in t..=n as u32 {
                        let needed = binomial_u64(m as u64, t as u64);
                        if e >= needed {
                            let sel = spanning_selection(&edges, m).unwrap();
                            assert!(sel.selected.len() as u32 <= m - t + 1);
                            assert!(sel.union.len() as u32 >= m);
                            assert!(sel.hypothesis_met);
                        }
                    }
                }
            }
        }
        format!("{graphs_checked} hypergraphs, both greedy floors hold")
    });
}

fn binomial_u64(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut r = 1u64;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

#[test]
fn criterion_06_matching_count_bounds() {
    criterion(6, "t-matching count lower bounds", || {
        let mut weak_hits = 0;
        let mut strong_hits = 0;
        for k in 0..100u64 {
            let n = 24 + 2 * (k as usize % 30); // 24..=82
            let layers = 1 + (k as usize % 2);
            let g = support::hamilton_union(n, layers, 11_000 + k);
            let e = g.m() as u64;
            let delta = g.max_degree() as u64;
            for t in 2..=3u32 {
                if e < 4 * delta * t as u64 {
                    continue;
                }
                let count = counting::count_t_matchings(&g, t).unwrap().count;
                let count_q = BigRational::from_integer(BigInt::from(count));
                let et = BigRational::from_integer(BigInt::from(big(e).pow(t)));
                let tfact: u64 = (1..=t as u64).product();
                weak_hits += 1;
                assert!(
                    count_q.clone() * ratio((1u64 << t) as i64 * tfact as i64, 1) >= et,
                    "weak bound t={t} n={n}"
                );
                if e >= 4 * delta * (t as u64) * (t as u64) {
                    strong_hits += 1;
                    assert!(
                        count_q * ratio(2 * tfact as i64, 1) >= et,
                        "strong bound t={t} n={n}"
                    );
                }
            }
        }
        assert!(
            weak_hits >= 100,
            "sample must actually satisfy the weak hypothesis"
        );
        assert!(
            strong_hits >= 30,
            "sample must exercise the strong hypothesis"
        );
        format!("{weak_hits} weak and {strong_hits} strong hypothesis hits, zero violations")
    });
}

#[test]
fn criterion_07_regularization_exactness() {
    criterion(7, "regularization exactness", || {
        // constant facts, swept in integers
        assert_eq!(threshold_ratio(8), BigRational::one());
        for i in 2u32..=200 {
            assert!(
                big(i as u64).pow(4) < big(25) * (BigUint::one() << i),
                "i^2/2^(i/2) < 5"
            );
            assert!(
                big(i as u64).pow(8) < big(328 * 328) * (BigUint::one() << i),
                "i^4/2^(i/2) < 328"
            );
        }
        for i in 100u64..=400 {
            assert!(
                big(i + 2).pow(8) < big(2) * big(i).pow(8),
                "two-step tail decrease"
            );
        }

        let e_q = |x: usize| BigRational::from_integer(BigInt::from(x));
        for k in 0..50u64 {
            let d = 416 + (k as u32 % 6) * 16; // 416..=496
            let g = support::circulant_biregular(512, d, 13_000 + k);
            let res = regularize(&g).unwrap();
            let e = g.m();
            // headline fraction in integers
            assert!(
                big(res.e_prime as u64)
                    * big(64)
                    * big((res.i * res.i) as u64)
                    * big((res.j * res.j) as u64)
                    >= big(e as u64),
                "E' >= E/(64 i^2 j^2)"
            );
            assert_eq!(res.a_prime.len(), 512usize >> res.i, "|A'| floor");
            assert_eq!(res.b_prime.len(), 512usize >> res.j, "|B'| floor");
            // window audit, recomputed from raw degrees
            let unit_a = e_q(e) / e_q(512);
            for &v in &res.a_prime {
                let deg = e_q(g.degree(v));
                assert!(deg >= threshold_ratio(res.i - 1) * &unit_a);
                assert!(deg < threshold_ratio(res.i) * &unit_a);
            }
            let base_b = e_q(e) / e_q(8 * (res.i * res.i) as usize);
            let unit_b = base_b / e_q(512);
            for &v in &res.b_prime {
                // intermediate degree: neighbors inside A'
                let tilde_deg = res.a_prime.iter().filter(|&&u| g.has_edge(u, v)).count();
                let deg = e_q(tilde_deg);
                assert!(deg >= threshold_ratio(res.j - 1) * &unit_b);
                assert!(deg < threshold_ratio(res.j) * &unit_b);
            }
            // ported edge count, recounted by hand
            let recount = res
                .a_prime
                .iter()
                .map(|&u| res.b_prime.iter().filter(|&&v| g.has_edge(u, v)).count())
                .sum::<usize>();
            assert_eq!(recount, res.e_prime);
        }
        "50 dense bipartite graphs (sides 512) plus constant sweeps".into()
    });
}

/// Test-local re-measurement: min degree and radius of the induced subgraph,
/// by adjacency loops and BFS.
fn independent_measure(g: &Graph, vs: &[u32]) -> (usize, Option<u32>, usize) {
    let k = vs.len();
    let deg = |i: usize| {
        (0..k)
            .filter(|&j| j != i && g.has_edge(vs[i], vs[j]))
            .count()
    };
    let min_degree = (0..k).map(deg).min().unwrap_or(0);
    let mut radius: Option<u32> = None;
    let mut best: Option<u32> = None;
    for s in 0..k {
        let mut dist = vec![u32::MAX; k];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in 0..k {
                if dist[w] == u32::MAX && g.has_edge(vs[u], vs[w]) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if dist.contains(&u32::MAX) {
            best = None;
            break;
        }
        let ecc = *dist.iter().max().unwrap();
        best = Some(best.map_or(ecc, |b: u32| b.min(ecc)));
    }
    if let Some(ecc) = best {
        radius = Some(ecc);
    }
    (min_degree, radius, k)
}

#[test]
fn criterion_08_end_to_end_extraction() {
    criterion(8, "end-to-end extraction", || {
        let k12 = generate(GraphKind::CompleteBipartite { a: 12, b: 12 }, 0).unwrap();
        let params = |seed: u64| ExtractParams {
            mode: ExtractMode::Even,
            t: 2,
            r: 2,
            theta: 2,
            seed,
            max_split_attempts: 5,
            collision_threshold: Some(3),
            cap: DEFAULT_CAP,
        };
        let mut certified = 0;
        for seed in 1..=10 {
            let out = extract(&k12, &params(seed)).unwrap();
            if let ExtractResult::Certified(cert) = &out.result {
                certified += 1;
                assert!(certify(&k12, cert).unwrap().pass);
                let (min_deg, radius, order) = independent_measure(&k12, &cert.vertices);
                assert!(min_deg >= 4, "delta(G*) >= 4");
                assert!(radius.is_some_and(|r| r <= 2), "rad(G*) <= 2");
                assert!(order < 12, "n(G*) < 12");
            }
        }
        assert!(certified >= 1, "at least one seed in 1..=10 certifies");

        // fuzz: dense random hosts; every certified outcome re-verifies
        let mut fuzz_certified = 0;
        for k in 0..100u64 {
            let n = 20 + (k as usize % 21);
            let p = [0.5, 0.65, 0.8][k as usize % 3];
            let g = generate(GraphKind::Gnp { n, p }, 15_000 + k).unwrap();
            let out = extract(
                &g,
                &ExtractParams {
                    mode: ExtractMode::Even,
                    t: 2,
                    r: 2,
                    theta: 2,
                    seed: k,
                    max_split_attempts: 3,
                    collision_threshold: Some(3),
                    cap: DEFAULT_CAP,
                },
            )
            .unwrap();
            if let ExtractResult::Certified(cert) = &out.result {
                fuzz_certified += 1;
                assert!(
                    certify(&g, cert).unwrap().pass,
                    "fuzz cert must verify (k={k})"
                );
                let (min_deg, radius, order) = independent_measure(&g, &cert.vertices);
                assert!(min_deg >= 4 && radius.is_some_and(|r| r <= 2) && order < 12);
            }
        }

        // odd-mode short circuit: a host containing K_{3,15}
        let mut edges = Vec::new();
        for u in 0..3u32 {
            for v in 0..15u32 {
                edges.push((u, 3 + v));
            }
        }
        edges.push((18, 19));
        edges.push((19, 20));
        let host = Graph::new(21, &edges).unwrap();
        let out = extract(
            &host,
            &ExtractParams {
                mode: ExtractMode::Odd,
                t: 2,
                r: 1,
                theta: 1,
                seed: 0,
                max_split_attempts: 1,
                collision_threshold: None,
                cap: DEFAULT_CAP,
            },
        )
        .unwrap();
        let cert = out.result.certificate().expect("short circuit must fire");
        assert!(matches!(cert.witness, Witness::Biclique { .. }));
        let report = certify(&host, cert).unwrap();
        assert!(report.pass);
        assert_eq!(
            report.measured.avg_degree,
            BigRational::from_integer(5.into())
        );
        assert_eq!(report.measured.radius, Radius::Finite(2));
        assert_eq!(report.measured.order, 18);
        let (r, t) = (1usize, 2usize);
        assert!(
            report.measured.order <= r * (4 * t * t + 2 * t),
            "order <= r(4t^2+2t)"
        );

        format!(
            "{certified}/10 biclique seeds certified, {fuzz_certified}/100 fuzz certificates, all valid"
        )
    });
}

#[test]
fn criterion_09_structure_identities() {
    criterion(9, "generator and counter identities", || {
        // the (1,1) join is a four-cycle
        let g11 = generate(GraphKind::Hst { s: 1, t: 1 }, 0).unwrap();
        assert_eq!((g11.n(), g11.m()), (4, 4));
        assert!((0..4u32).all(|v| g11.degree(v) == 2));
        assert!(g11.degree_stats().unwrap().radius.is_finite(), "connected");

        // the (2,2) join is the 3-cube: 8 vertices, 12 edges, 3-regular,
        // bipartite, girth 4
        let g22 = generate(GraphKind::Hst { s: 2, t: 2 }, 0).unwrap();
        assert_eq!((g22.n(), g22.m()), (8, 12));
        assert!((0..8u32).all(|v| g22.degree(v) == 3));
        assert!(g22.has_bipartition());
        assert!(
            counting::count_c4(&g22) > BigUint::zero(),
            "bipartite with a C4: girth 4"
        );

        // h_st(1,1) copies coincide with the C4 count
        for k in 0..50u64 {
            let n = 5 + (k as usize % 6);
            let p = [0.3, 0.5, 0.7][k as usize % 3];
            let g = generate(GraphKind::Gnp { n, p }, 20_000 + k).unwrap();
            assert_eq!(
                counting::count_hst(&g, 1, 1, DEFAULT_CAP).unwrap(),
                counting::count_c4(&g),
                "seed {k}"
            );
        }
        "join identities and 50 seeded C4 comparisons".into()
    });
}

#[test]
fn criterion_10_exponent_calculator() {
    criterion(10, "deletion-method exponent", || {
        let c4 = generate(GraphKind::Cycle { n: 4 }, 0).unwrap();
        assert_eq!(erdos_renyi_exponent(&[c4]).unwrap().gamma, ratio(2, 3));
        let k3 = generate(GraphKind::Complete { n: 3 }, 0).unwrap();
        assert_eq!(erdos_renyi_exponent(&[k3]).unwrap().gamma, ratio(1, 2));

        // materialize the family of graphs on <= 5 vertices with average
        // degree >= 4 and compare against (m-2)/(d m/2 - 1) = 3/9
        let mut members = Vec::new();
        for n in 1..=5usize {
            let total = n * (n - 1) / 2;
            for mask in 0u32..1 << total {
                let mut edges = Vec::new();
                let mut idx = 0;
                for u in 0..n as u32 {
                    for v in u + 1..n as u32 {
                        if mask >> idx & 1 == 1 {
                            edges.push((u, v));
                        }
                        idx += 1;
                    }
                }
                if 2 * edges.len() >= 4 * n {
                    members.push(Graph::new(n, &edges).unwrap());
                }
            }
        }
        assert_eq!(members.len(), 1, "only the complete graph qualifies");
        let fe = erdos_renyi_exponent(&members).unwrap();
        assert_eq!(fe.gamma, ratio(1, 3));
        assert_eq!(fe.gamma, ratio(5 - 2, 4 * 5 / 2 - 1));
        "gamma values 2/3, 1/2, 1/3 all exact".into()
    });
}

#[test]
fn criterion_11_claim_level_bounds() {
    criterion(11, "heavy/light matching claim bounds", || {
        let mut hosts: Vec<Graph> = vec![
            generate(GraphKind::Cycle { n: 6 }, 0)
                .unwrap()
                .with_bipartition(&[0, 2, 4])
                .unwrap(),
            generate(GraphKind::Cycle { n: 8 }, 0)
                .unwrap()
                .with_bipartition(&[0, 2, 4, 6])
                .unwrap(),
            generate(GraphKind::Cycle { n: 10 }, 0)
                .unwrap()
                .with_bipartition(&[0, 2, 4, 6, 8])
                .unwrap(),
            generate(GraphKind::Cycle { n: 12 }, 0)
                .unwrap()
                .with_bipartition(&[0, 2, 4, 6, 8, 10])
                .unwrap(),
            support::subdivided_k4(),
            support::fano_incidence(),
            generate(GraphKind::CompleteBipartite { a: 2, b: 3 }, 0).unwrap(),
            generate(GraphKind::CompleteBipartite { a: 3, b: 3 }, 0).unwrap(),
            generate(GraphKind::CompleteBipartite { a: 1, b: 6 }, 0).unwrap(),
        ];
        let mut seed = 30_000;
        while hosts.len() < 22 {
            let a = 4 + (seed % 4) as u32;
            let b = 4 + (seed % 3) as u32;
            let g = support::random_bipartite(a, b, 0.3, seed);
            seed += 1;
            if g.m() < 2 {
                continue;
            }
            if counting::count_hst(&g, 2, 2, DEFAULT_CAP)
                .unwrap()
                .is_zero()
            {
                hosts.push(g);
            }
        }
        for (idx, g) in hosts.iter().enumerate() {
            let rep = smalldense::regularization::claim_bounds_check(g, 2, DEFAULT_CAP).unwrap();
            assert!(
                rep.passes,
                "host {idx}: claim1 {:?} claim2 {:?}",
                rep.claim1_violations, rep.claim2_violations
            );
        }
        format!(
            "{} H-free bipartite hosts, zero claim violations",
            hosts.len()
        )
    });
}
