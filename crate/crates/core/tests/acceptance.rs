//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Run with `cargo test -p coxwalls-core --test acceptance -- --nocapture`
//! to see the per-criterion lines.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::time::{Duration, Instant};

use num_rational::Rational64;

use coxwalls_core::{
    double_tracking_bound, spiral_path, CoxeterSystem, EdgePath, Element, QuasiGeodesicParams,
    Word,
};

struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 11
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

fn random_path(sys: &CoxeterSystem, rng: &mut Lcg, max_len: usize) -> EdgePath {
    let len = rng.below(max_len + 1);
    let letters = (0..len).map(|_| rng.below(sys.rank()) as u8).collect();
    EdgePath::new(sys.identity(), letters)
}

fn rank2(name: &str, m: u32) -> (String, CoxeterSystem) {
    (
        name.to_string(),
        CoxeterSystem::new(vec!["s".into(), "t".into()], vec![vec![1, m], vec![m, 1]]).unwrap(),
    )
}

fn the_six() -> Vec<(String, CoxeterSystem)> {
    vec![
        rank2("dinf", 0),
        rank2("a2", 3),
        rank2("b2", 4),
        (
            "m2x3".into(),
            CoxeterSystem::new(
                vec!["s".into(), "t".into(), "u".into()],
                vec![vec![1, 2, 2], vec![2, 1, 3], vec![2, 3, 1]],
            )
            .unwrap(),
        ),
        (
            "a2tilde".into(),
            CoxeterSystem::new(
                vec!["s".into(), "t".into(), "u".into()],
                vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]],
            )
            .unwrap(),
        ),
        ("grid".into(), coxwalls_core::grid_system()),
    ]
}

fn infinite_ones() -> Vec<(String, CoxeterSystem, Vec<&'static str>)> {
    the_six()
        .into_iter()
        .filter(|(name, _)| ["dinf", "a2tilde", "grid"].contains(&name.as_str()))
        .map(|(name, sys)| {
            let gens: Vec<&'static str> = match name.as_str() {
                "dinf" => vec!["st", "ts", "stst"],
                "a2tilde" => vec!["stu", "stsu", "sutsu"],
                "grid" => vec!["ab", "abcd", "abc"],
                _ => unreachable!(),
            };
            (name, sys, gens)
        })
        .collect()
}

fn report(criterion: usize, label: &str, pass: bool) {
    println!(
        "acceptance criterion {criterion:2} ({label}): {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} ({label}) failed");
}

#[test]
fn criterion_01_word_problem_oracle_equivalence() {
    let started = Instant::now();
    let radius = 7usize;
    for (name, sys) in the_six() {
        // Independent oracle: BFS over naive words with Tits-reduced keys.
        let mut dist: HashMap<Word, usize> = HashMap::new();
        dist.insert(Word::empty(), 0);
        let mut frontier = vec![Word::empty()];
        for d in 0..radius {
            let mut next = Vec::new();
            for w in &frontier {
                for s in 0..sys.rank() as u8 {
                    let mut letters = w.letters().to_vec();
                    letters.push(s);
                    let key = sys.reduce(&Word::new(letters)).unwrap();
                    if !dist.contains_key(&key) {
                        dist.insert(key.clone(), d + 1);
                        next.push(key);
                    }
                }
            }
            frontier = next;
        }
        let ball = sys.ball(radius).unwrap();
        assert_eq!(ball.len(), dist.len(), "{name}: ball size");
        for e in &ball {
            assert_eq!(dist[e.nf()], e.len(), "{name}: length of {e:?}");
        }
    }
    let ok = started.elapsed() < Duration::from_secs(120);
    report(1, "word-problem oracle equivalence", ok);
}

#[test]
fn criterion_02_length_equals_wall_count() {
    for (name, sys) in the_six() {
        for w in sys.ball(6).unwrap() {
            let walls = sys.walls_separating(&sys.identity(), &w).unwrap();
            assert_eq!(walls.len(), w.len(), "{name}: wall count of {w:?}");
            let as_set: BTreeSet<Element> = walls
                .iter()
                .map(|q| q.reflection().clone())
                .collect();
            assert_eq!(as_set.len(), walls.len(), "{name}: duplicate walls");
            for word in sys.all_reduced_words(&w).unwrap() {
                let mut seen = BTreeSet::new();
                let mut u = sys.identity();
                for &l in word.letters() {
                    seen.insert(sys.edge_wall(&u, l).unwrap().reflection().clone());
                    u = sys.multiply(&u, &sys.generator(l).unwrap()).unwrap();
                }
                assert_eq!(seen, as_set, "{name}: geodesic dependence for {w:?}");
            }
        }
    }
    report(2, "length equals separating wall count", true);
}

#[test]
fn criterion_03_deletion_calculus() {
    for (name, sys) in the_six() {
        let mut rng = Lcg(0x03_1337 ^ name.len() as u64);
        for _ in 0..1000 {
            let p = random_path(&sys, &mut rng, 14);
            let end = sys.path_end(&p).unwrap();
            let d = sys.distance(p.start(), &end).unwrap();
            let mut parity: BTreeMap<Element, usize> = BTreeMap::new();
            for q in sys.wall_sequence(&p).unwrap() {
                *parity.entry(q.reflection().clone()).or_default() += 1;
            }
            let mut cur = p.clone();
            let mut steps = 0;
            loop {
                let walls = sys.wall_sequence(&cur).unwrap();
                let mut hit = None;
                'outer: for i in 0..walls.len() {
                    for j in (i + 1)..walls.len() {
                        if walls[i] == walls[j] {
                            hit = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                let Some((i, j)) = hit else { break };
                let next = sys.delete_pair(&cur, i, j).unwrap();
                assert_eq!(next.len(), cur.len() - 2, "{name}: shortens by 2");
                assert_eq!(sys.path_end(&next).unwrap(), end, "{name}: endpoints");
                cur = next;
                steps += 1;
            }
            // Parity of every wall is preserved down to the geodesic.
            let mut final_parity: BTreeMap<Element, usize> = BTreeMap::new();
            for q in sys.wall_sequence(&cur).unwrap() {
                *final_parity.entry(q.reflection().clone()).or_default() += 1;
            }
            for (wall, count) in &parity {
                let fc = final_parity.get(wall).copied().unwrap_or(0);
                assert_eq!(count % 2, fc % 2, "{name}: parity of {wall:?}");
            }
            for (wall, fc) in &final_parity {
                let c = parity.get(wall).copied().unwrap_or(0);
                assert_eq!(c % 2, fc % 2, "{name}: parity of {wall:?}");
            }
            assert!(sys.is_geodesic(&cur).unwrap(), "{name}: reaches a geodesic");
            assert_eq!(steps, (p.len() - d) / 2, "{name}: step count");
        }
    }
    report(3, "deletion calculus", true);
}

/// Stabilized parallel-wall estimate: identical at radii 7 and 8.
fn stabilized_p1(sys: &CoxeterSystem, name: &str) -> usize {
    let e7 = sys.estimate_parallel_wall_constant(1, 7).unwrap().estimate;
    let e8 = sys.estimate_parallel_wall_constant(1, 8).unwrap().estimate;
    assert_eq!(e7, e8, "{name}: estimate not stable between radii 7 and 8");
    e8
}

#[test]
fn criterion_04_rightside_approximation() {
    for (name, sys) in the_six() {
        let p1 = stabilized_p1(&sys, &name);
        let mut rng = Lcg(0x04_c0de ^ name.len() as u64);
        for _ in 0..500 {
            let p = random_path(&sys, &mut rng, 14);
            let b = sys.bracket_report(&p).unwrap().max;
            let out = sys.geodesic_approximation(&p).unwrap();
            let end = sys.path_end(&p).unwrap();
            for v in sys.path_vertices(&out.approx).unwrap() {
                assert_eq!(
                    sys.defect(p.start(), &v, &end).unwrap(),
                    0,
                    "{name}: defect"
                );
            }
            assert!(
                out.l_achieved <= (2 * p1 + 1) * b,
                "{name}: L = {} exceeds (2*{p1}+1)*{b}",
                out.l_achieved
            );
        }
    }
    report(4, "rightside approximation bound", true);
}

#[test]
fn criterion_05_straightening() {
    let started = Instant::now();
    // 2000 random and structured paths across the six systems.
    let mut rng = Lcg(0x05_f00d);
    let systems = the_six();
    let mut corpus: Vec<(CoxeterSystem, EdgePath)> = Vec::new();
    for i in 0..1700 {
        let (_, sys) = &systems[i % systems.len()];
        corpus.push((sys.clone(), random_path(sys, &mut rng, 14)));
    }
    // Structured: backtracking bursts, doubled geodesics, spiral prefixes.
    for (_, sys) in &systems {
        for pattern in [
            vec![0u8, 0, 1, 1, 0, 0],
            vec![0, 1, 0, 1, 0, 1, 1, 0, 1, 0],
            vec![1, 0, 0, 1, 1, 0, 0, 1],
        ] {
            let letters = pattern
                .iter()
                .map(|&l| l % sys.rank() as u8)
                .collect::<Vec<_>>();
            corpus.push((sys.clone(), EdgePath::new(sys.identity(), letters)));
        }
    }
    let grid = coxwalls_core::grid_system();
    for windings in 1..=3 {
        corpus.push((
            grid.clone(),
            spiral_path(&grid, windings, coxwalls_core::SpiralParams::default()).unwrap(),
        ));
    }
    while corpus.len() < 2000 {
        let (_, sys) = &systems[corpus.len() % systems.len()];
        corpus.push((sys.clone(), random_path(sys, &mut rng, 14)));
    }
    for (sys, p) in &corpus {
        let out = sys.straighten(p).unwrap();
        let closed = sys.path_end(p).unwrap() == *p.start();
        if closed {
            assert!(out.geodesic.is_empty());
        } else {
            assert!(sys.is_geodesic(&out.geodesic).unwrap());
            assert_eq!(
                sys.path_end(&out.geodesic).unwrap(),
                sys.path_end(p).unwrap()
            );
            assert_eq!(out.geodesic.start(), p.start());
        }
    }
    // Periodic paths: K stabilizes from k = 3 on.
    for (name, sys, gens) in infinite_ones() {
        for gtext in gens {
            let g = sys
                .normal_form(&sys.word_from_names(gtext).unwrap())
                .unwrap();
            assert!(
                sys.has_infinite_order(&g).unwrap(),
                "{name}: {gtext} has finite order"
            );
            let ks: Vec<usize> = (1..=10)
                .map(|k| {
                    let p = sys.periodic_path(&g, k).unwrap();
                    sys.straighten(&p).unwrap().k_achieved
                })
                .collect();
            let at3 = ks[2];
            let max_from3 = ks[2..].iter().copied().max().unwrap();
            assert_eq!(
                max_from3, at3,
                "{name}: K values {ks:?} for g = {gtext} not constant from k = 3"
            );
        }
    }
    let ok = started.elapsed() < Duration::from_secs(300);
    report(5, "straightening produces tracking geodesics", ok);
}

#[test]
fn criterion_06_spiral_growth() {
    let sys = coxwalls_core::grid_system();
    let mut brackets = Vec::new();
    let mut ks = Vec::new();
    for windings in 2..=6 {
        let p = spiral_path(&sys, windings, coxwalls_core::SpiralParams::default()).unwrap();
        brackets.push(sys.bracket_report(&p).unwrap().max);
        ks.push(sys.straighten(&p).unwrap().k_achieved);
    }
    let strict = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
    assert!(strict(&brackets), "bracket maxima {brackets:?}");
    assert!(strict(&ks), "tracking constants {ks:?}");
    report(6, "spiral bracket and tracking growth", true);
}

#[test]
fn criterion_07_double_tracking_bound() {
    let one = Rational64::from_integer(1);
    let zero = Rational64::from_integer(0);
    let geo_params = QuasiGeodesicParams::new(one, zero).unwrap();
    let systems = the_six();
    let mut rng = Lcg(0x07_ab1e);
    let mut checked = 0;
    let mut index = 0;
    while checked < 200 {
        let (_, sys) = &systems[index % systems.len()];
        index += 1;
        let p1 = random_path(sys, &mut rng, 12);
        let out = sys.straighten(&p1).unwrap();
        if out.geodesic.is_empty() && !p1.is_empty() {
            continue; // closed input degenerates to a point
        }
        let k = out.k_achieved;
        let rep = sys
            .tracking_correspondence(&p1, &out.geodesic, k, &geo_params)
            .unwrap();
        let reverse = sys.tracking_distance(&out.geodesic, &p1).unwrap();
        let bound = double_tracking_bound(one, zero, k as u64);
        assert!(
            Rational64::from_integer(reverse as i64) <= bound,
            "reverse tracking {reverse} exceeds {bound}"
        );
        assert!(reverse <= rep.bound_checked);
        checked += 1;
    }
    report(7, "double-tracking bound on sampled pairs", true);
}

#[test]
fn criterion_08_dilworth_optimality() {
    for (name, sys) in the_six() {
        for w in sys.ball(6).unwrap() {
            let part = sys.dilworth_partition(&sys.identity(), &w).unwrap();
            let walls = sys.walls_separating(&sys.identity(), &w).unwrap();
            assert_eq!(part.wall_count(), walls.len(), "{name}: partition covers");
            let width = sys.max_antichain(&walls).unwrap();
            assert_eq!(
                part.chains.len(),
                width,
                "{name}: chain count vs width for {w:?}"
            );
            let mut seen = BTreeSet::new();
            for chain in &part.chains {
                for q in chain {
                    assert!(seen.insert(q.reflection().clone()), "{name}: repeat");
                }
                for i in 0..chain.len() {
                    for j in (i + 1)..chain.len() {
                        assert!(
                            sys.crosses(&chain[i], &chain[j]).unwrap().is_parallel(),
                            "{name}: chain pair crosses"
                        );
                        assert!(
                            sys.chain_leq(&chain[i], &chain[j], &sys.identity()).unwrap(),
                            "{name}: chain order"
                        );
                        assert!(
                            !sys.chain_leq(&chain[j], &chain[i], &sys.identity()).unwrap(),
                            "{name}: strictness"
                        );
                    }
                }
            }
        }
    }
    report(8, "Dilworth-optimal chain partitions", true);
}

#[test]
fn criterion_09_antichain_bound_stability() {
    for (name, sys) in the_six() {
        if !["a2tilde", "grid"].contains(&name.as_str()) {
            continue;
        }
        let observed = |radius: usize| -> usize {
            let mut best = 0;
            for w in sys.ball(radius).unwrap() {
                let walls = sys.walls_separating(&sys.identity(), &w).unwrap();
                best = best.max(sys.max_antichain(&walls).unwrap());
            }
            best
        };
        let at7 = observed(7);
        let at8 = observed(8);
        assert_eq!(at7, at8, "{name}: observed antichain bound not stable");
    }
    report(9, "empirical antichain bound stability", true);
}

#[test]
fn criterion_10_wall_proximity_bounds() {
    for (name, sys) in the_six() {
        let p1 = stabilized_p1(&sys, &name);
        let ball = sys.ball(6).unwrap();
        let mut walls = BTreeSet::new();
        for u in &ball {
            for s in 0..sys.rank() as u8 {
                walls.insert(sys.edge_wall(u, s).unwrap());
            }
        }
        // Geodesics between support vertices that do not cross the wall
        // stay within P^(1) of the support.
        for q in &walls {
            let supp = sys.wall_support_in_ball(q, 6).unwrap();
            for a in &supp {
                for b in &supp {
                    if a >= b || sys.separates(q, a, b).unwrap() {
                        continue;
                    }
                    let geo = sys.geodesic(a, b).unwrap();
                    for v in sys.path_vertices(&geo).unwrap() {
                        let d = sys
                            .wall_distance(&v, q, 10)
                            .unwrap()
                            .expect("support nearby");
                        assert!(d <= p1, "{name}: reflect bound {d} > {p1}");
                    }
                }
            }
        }
        // Geodesics whose endpoints are within A of the support stay
        // within 2A(2 P^(1) + 1) + P^(1) of it.
        for q in &walls {
            for a in &ball {
                for b in &ball {
                    if a >= b {
                        continue;
                    }
                    let (Some(da), Some(db)) = (
                        sys.wall_distance(a, q, 6).unwrap(),
                        sys.wall_distance(b, q, 6).unwrap(),
                    ) else {
                        continue;
                    };
                    let big_a = da.max(db);
                    if big_a > 2 {
                        continue;
                    }
                    let bound = 2 * big_a * (2 * p1 + 1) + p1;
                    let geo = sys.geodesic(a, b).unwrap();
                    for v in sys.path_vertices(&geo).unwrap() {
                        let d = sys
                            .wall_distance(&v, q, 10)
                            .unwrap()
                            .expect("support nearby");
                        assert!(d <= bound, "{name}: near bound {d} > {bound}");
                    }
                }
            }
        }
    }
    report(10, "wall proximity bounds", true);
}
