//! Acceptance criteria 1 to 10, one PASS/FAIL line each. Runs without the
//! libtest harness so the lines always show up in `cargo test` output.

mod common;

use std::collections::HashSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use sl3_specht::specht::{
    act_module, check_representation, expand_in_m, expand_in_m_with, expand_via_webs, BasisTag, SpechtBasis,
    TransitionMatrix,
};
use sl3_specht::tableau::hook_length_count;
use sl3_specht::web::{
    act_web, crossing_diagram_of_fork, reduce, reduce_with, stack_crossing, Schedule, VertexKind, Web, WebBuilder,
    WebSum,
};
use sl3_specht::{BoundaryWord, ForkDiagram, LinComb, OrderKind, Tableau};

type Outcome = Result<String, String>;

fn d(t: &[[usize; 3]]) -> ForkDiagram {
    ForkDiagram::from_triples(t).unwrap()
}

fn comb(terms: &[(i64, &[[usize; 3]])]) -> LinComb<ForkDiagram> {
    LinComb::from_terms(terms.iter().map(|&(c, t)| (d(t), c)))
}

const M0: &[[usize; 3]] = &[[1, 2, 3], [4, 5, 6]];
const M1: &[[usize; 3]] = &[[1, 2, 4], [3, 5, 6]];
const M2: &[[usize; 3]] = &[[1, 5, 6], [2, 3, 4]];
const M3: &[[usize; 3]] = &[[1, 2, 6], [3, 4, 5]];
const M4: &[[usize; 3]] = &[[1, 4, 5], [2, 3, 6]];
const V2: &[[usize; 3]] = &[[1, 3, 4], [2, 5, 6]];
const V3: &[[usize; 3]] = &[[1, 2, 5], [3, 4, 6]];
const V4: &[[usize; 3]] = &[[1, 3, 5], [2, 4, 6]];
const U2: &[[usize; 3]] = &[[1, 4, 6], [2, 3, 5]];
const U3: &[[usize; 3]] = &[[1, 3, 6], [2, 4, 5]];

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(t: Instant, limit: Duration, what: &str) -> Result<String, String> {
    let e = t.elapsed();
    ensure(e < limit, format!("{what} took {e:?}, limit {limit:?}"))?;
    Ok(format!("{e:.2?}"))
}

// 1. the five local identities, through expansion and through the action
fn criterion_1() -> Outcome {
    let t = Instant::now();
    let printed = [
        ("v2", V2, comb(&[(1, M2), (1, M1), (-1, M0)])),
        ("v3", V3, comb(&[(1, M3), (1, M1), (-1, M0)])),
        ("u2", U2, comb(&[(1, M4), (1, M2), (-1, M0)])),
        ("u3", U3, comb(&[(1, M4), (1, M3), (-1, M0)])),
        ("v4", V4, comb(&[(1, M4), (1, M3), (1, M2), (1, M1), (-1, M0)])),
    ];
    for (name, lhs, rhs) in &printed {
        ensure(expand_in_m(&d(lhs)) == *rhs, format!("expand_in_m({name})"))?;
        ensure(eval_fork_sum(rhs) == eval_fork(&d(lhs)), format!("tensor check of {name}"))?;
    }
    // v2 = s2.m1, v3 = s4.m1, u2 = s4.m2, u3 = s2.m3, v4 = s4.v2
    let act = |x: &LinComb<ForkDiagram>, i| act_module(x, i).unwrap();
    let single = |t: &[[usize; 3]]| LinComb::single(d(t));
    ensure(act(&single(M1), 2) == printed[0].2, "s2.m1")?;
    ensure(act(&single(M1), 4) == printed[1].2, "s4.m1")?;
    ensure(act(&single(M2), 4) == printed[2].2, "s4.m2")?;
    ensure(act(&single(M3), 2) == printed[3].2, "s2.m3")?;
    ensure(act(&printed[0].2, 4) == printed[4].2, "s4.v2")?;
    Ok(format!("5 identities and 5 actions exact, {}", within(t, Duration::from_secs(1), "criterion 1")?))
}

// independent counts: counted crossings and boundary word from the triples
fn crossings_by_hand(arcs: &[[usize; 3]]) -> usize {
    let interleave =
        |(a, b): (usize, usize), (c, e): (usize, usize)| (a < c && c < b && b < e) || (c < a && a < e && e < b);
    let mut c = 0;
    for i in 0..arcs.len() {
        for j in i + 1..arcs.len() {
            let (x, y) = (arcs[i], arcs[j]);
            c += interleave((x[0], x[1]), (y[0], y[1])) as usize;
            c += interleave((x[1], x[2]), (y[1], y[2])) as usize;
        }
    }
    c
}

fn word_by_hand(arcs: &[[usize; 3]]) -> String {
    let mut w = vec!['?'; 3 * arcs.len()];
    for a in arcs {
        w[a[0] - 1] = '+';
        w[a[1] - 1] = '0';
        w[a[2] - 1] = '-';
    }
    w.into_iter().collect()
}

// 2. the table of boundary words and crossing counts
fn criterion_2() -> Outcome {
    let table: [(&str, &[[usize; 3]], &str, usize); 12] = [
        ("v0", M0, "+0-+0-", 0),
        ("v1", M1, "+0+-0-", 0),
        ("v2", V2, "++0-0-", 1),
        ("v3", V3, "+0+0--", 1),
        ("v4", V4, "++00--", 2),
        ("u2", U2, "++00--", 1),
        ("u3", U3, "++00--", 1),
        ("m0", M0, "+0-+0-", 0),
        ("m1", M1, "+0+-0-", 0),
        ("m2", M2, "++0-0-", 0),
        ("m3", M3, "+0+0--", 0),
        ("m4", M4, "++00--", 0),
    ];
    for (name, arcs, word, c) in table {
        let x = d(arcs);
        ensure(word_by_hand(arcs) == word && crossings_by_hand(arcs) == c, format!("table entry {name} by hand"))?;
        ensure(x.boundary_word().to_string() == word, format!("w({name}) = {}", x.boundary_word()))?;
        ensure(x.crossing_count() == c, format!("c({name}) = {}", x.crossing_count()))?;
    }
    // the v_i and m_i are phi and psi of the five tableaux
    let ts = Tableau::enumerate(2).unwrap();
    let phis: HashSet<_> = ts.iter().map(|t| ForkDiagram::phi(t).unwrap()).collect();
    let psis: HashSet<_> = ts.iter().map(|t| ForkDiagram::psi(t).unwrap()).collect();
    ensure(phis == [M0, M1, V2, V3, V4].iter().map(|a| d(a)).collect(), "phi images")?;
    ensure(psis == [M0, M1, M2, M3, M4].iter().map(|a| d(a)).collect(), "psi images")?;
    Ok("12 diagrams: words and crossing counts match".into())
}

// standard fillings of (n,n,n) counted by filling boxes one at a time
fn count_by_recursion(n: usize) -> u128 {
    let mut f = vec![vec![vec![0u128; n + 1]; n + 1]; n + 1];
    f[0][0][0] = 1;
    for a in 0..=n {
        for b in 0..=a {
            for c in 0..=b {
                let mut v = f[a][b][c];
                if a > b {
                    v += f[a - 1][b][c];
                }
                if b > c {
                    v += f[a][b - 1][c];
                }
                if c > 0 {
                    v += f[a][b][c - 1];
                }
                f[a][b][c] = v;
            }
        }
    }
    f[n][n][n]
}

fn hooks_by_hand(n: usize) -> u128 {
    let num: u128 = (1..=3 * n as u128).product();
    // hook of box (r, c): arm + leg + 1
    let hooks: u128 = (0..3).flat_map(|r| (0..n).map(move |c| ((n - c - 1) + (2 - r) + 1) as u128)).product();
    num / hooks
}

// 3. dimensions
fn criterion_3() -> Outcome {
    let t = Instant::now();
    for (n, want) in [(2, 5u128), (3, 42), (4, 462)] {
        let listed = Tableau::enumerate(n).unwrap();
        let distinct: HashSet<_> = listed.iter().collect();
        ensure(listed.iter().all(|t| t.is_standard()) && distinct.len() == listed.len(), "distinct standard")?;
        let got = [listed.len() as u128, hook_length_count(n), count_by_recursion(n), hooks_by_hand(n)];
        ensure(got.iter().all(|&x| x == want), format!("n={n}: {got:?}"))?;
    }
    Ok(format!("5, 42, 462, {}", within(t, Duration::from_secs(10), "criterion 3")?))
}

fn det_by_hand(m: &TransitionMatrix) -> i128 {
    let k = m.dim();
    let mut a: Vec<Vec<i128>> =
        m.entries.iter().map(|r| r.iter().map(|x| i128::try_from(x).unwrap()).collect()).collect();
    let mut sign = 1;
    let mut prev = 1;
    for p in 0..k {
        if a[p][p] == 0 {
            match (p + 1..k).find(|&r| a[r][p] != 0) {
                Some(r) => {
                    a.swap(p, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in p + 1..k {
            for j in p + 1..k {
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
            }
        }
        prev = a[p][p];
    }
    sign * a[k - 1][k - 1]
}

// 4. P->M is invertible over the integers
fn criterion_4() -> Outcome {
    let mut dets = Vec::new();
    for n in [2, 3] {
        let basis = SpechtBasis::new(n).unwrap();
        let pm = basis.transition_matrix(BasisTag::P, BasisTag::M).unwrap();
        ensure(pm.diagonal_is_one(), format!("n={n}: diagonal"))?;
        let det = pm.determinant();
        ensure(det == BigInt::from(det_by_hand(&pm)), format!("n={n}: determinant routes disagree"))?;
        ensure(det == BigInt::from(1) || det == BigInt::from(-1), format!("n={n}: det {det}"))?;
        // every column evaluates like its polytabloid diagram
        for c in 0..basis.dim() {
            let col =
                LinComb::from_terms((0..basis.dim()).map(|r| (basis.m_diagrams()[r].clone(), pm.entry(r, c).clone())));
            ensure(eval_fork_sum(&col) == eval_fork(&basis.p_diagrams()[c]), format!("n={n}: column {c}"))?;
        }
        dets.push(det.to_string());
    }
    Ok(format!("det = {} for n = 2, 3, unit diagonal", dets.join(", ")))
}

// ≺* recomputed from the words of the tableaux
fn prec_star_by_hand(order: &[Tableau]) -> Vec<Vec<bool>> {
    let words: Vec<Vec<usize>> = order
        .iter()
        .map(|t| {
            let mut w = vec![0; 3 * t.n()];
            for (r, row) in t.rows().iter().enumerate() {
                for &e in row {
                    // larger is later in - < 0 < +
                    w[e - 1] = 2 - r;
                }
            }
            w
        })
        .collect();
    let k = order.len();
    let mut lt = vec![vec![false; k]; k];
    for a in 0..k {
        for b in 0..k {
            let diff: Vec<usize> = (0..words[a].len()).filter(|&p| words[a][p] != words[b][p]).collect();
            lt[a][b] = diff.len() == 2 && {
                let (i, j) = (diff[0], diff[1]);
                words[b][i] > words[b][j] && words[a][i] == words[b][j] && words[a][j] == words[b][i]
            };
        }
    }
    for m in 0..k {
        for a in 0..k {
            for b in 0..k {
                if lt[a][m] && lt[m][b] {
                    lt[a][b] = true;
                }
            }
        }
    }
    lt
}

// 5. all pairwise transition matrices are unitriangular
fn criterion_5() -> Outcome {
    let t = Instant::now();
    let mut weak_report = Vec::new();
    let mut checked = 0;
    for n in [2, 3] {
        let basis = SpechtBasis::new(n).unwrap();
        let prec = basis.poset(OrderKind::PrecClosure).unwrap();
        let weak = basis.poset(OrderKind::Weak).unwrap();
        let by_hand = prec_star_by_hand(basis.order());
        for from in BasisTag::ALL {
            for to in BasisTag::ALL {
                if from == to {
                    continue;
                }
                let m = basis.transition_matrix(from, to).unwrap();
                ensure(m.is_unitriangular(&prec), format!("n={n} {from}->{to} under prec*"))?;
                let k = m.dim();
                let ok = (0..k).all(|r| {
                    (0..k).all(|c| {
                        let x = m.entry(r, c);
                        if r == c {
                            *x == BigInt::from(1)
                        } else {
                            *x == BigInt::from(0) || by_hand[r][c]
                        }
                    })
                });
                ensure(ok, format!("n={n} {from}->{to} against the recomputed order"))?;
                checked += 1;
                if n == 3 {
                    weak_report.push(format!("{from}->{to} {}", m.violations(&weak).len()));
                }
            }
        }
    }
    let time = within(t, Duration::from_secs(60), "criterion 5")?;
    Ok(format!(
        "{checked} matrices unitriangular under prec*; weak-order violations at n=3 (informational): {}; {time}",
        weak_report.join(", ")
    ))
}

fn loop_web() -> Web {
    Web::loops_only(1)
}

// a fork on three points whose third leg runs through a bigon
fn bigon_web() -> Web {
    let mut b = WebBuilder::new(3);
    let a = b.source();
    let s = b.sink();
    let x = b.source();
    let conn = |b: &mut WebBuilder, p, q| b.connect(p, q).unwrap();
    let (b1, b2, b3) = (b.boundary(1), b.boundary(2), b.boundary(3));
    conn(&mut b, a[0], b1);
    conn(&mut b, a[1], b2);
    conn(&mut b, a[2], s[0]);
    conn(&mut b, s[1], x[1]);
    conn(&mut b, s[2], x[0]);
    conn(&mut b, x[2], b3);
    b.build().unwrap()
}

// 6. loop and bigon factors
fn criterion_6() -> Outcome {
    let empty = Web::empty().key();
    let r1 = reduce(&loop_web());
    ensure(r1 == WebSum::term(empty.clone(), 3), format!("loop reduces to {r1}"))?;
    ensure(eval_web(&loop_web()) == scaled(&eval_web(&Web::empty()), 3), "loop tensor")?;
    let fork = crossing_diagram_of_fork(&d(&[[1, 2, 3]]));
    let bigon = bigon_web();
    ensure(bigon.kinds().iter().filter(|k| **k != VertexKind::Boundary).count() == 3, "bigon web shape")?;
    let r2 = reduce(&bigon);
    ensure(r2 == WebSum::term(fork.key(), -2), format!("bigon reduces to {r2}"))?;
    ensure(eval_web(&bigon) == scaled(&eval_fork(&d(&[[1, 2, 3]])), -2), "bigon tensor")?;
    let theta = reduce(&Web::theta());
    ensure(theta == WebSum::term(empty, -6), "theta")?;
    Ok("loop = 3, bigon = -2 (theta = -6), confirmed by tensor evaluation".into())
}

// 7. s_i is an involution on webs, and two stacked crossings cancel
fn criterion_7() -> Outcome {
    let basis = SpechtBasis::new(2).unwrap();
    let mut pairs = 0;
    for w in basis.webs() {
        let x = WebSum::single(w.key());
        for i in 1..6 {
            let once = act_web(&x, i).unwrap();
            ensure(act_web(&once, i).unwrap() == x, format!("s{i} twice on a basis web"))?;
            let double = stack_crossing(&stack_crossing(w, i).unwrap(), i).unwrap();
            ensure(double.crossing_count() == 2, "two crossings stacked")?;
            ensure(reduce(&double) == x, format!("double crossing at {i}"))?;
            ensure(eval_web(&double) == eval_web(w), "double crossing tensor")?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (web, generator) pairs: involution and Reidemeister II exact"))
}

fn inversions_by_hand(w: &[u8]) -> usize {
    (0..w.len()).flat_map(|i| (i + 1..w.len()).map(move |j| (i, j))).filter(|&(i, j)| w[i] > w[j]).count()
}

// 8. w ≺ v implies Inv(w) < Inv(v)
fn criterion_8() -> Outcome {
    let sym = |c: char| match c {
        '-' => 0u8,
        '0' => 1,
        _ => 2,
    };
    let mut words = 0;
    let mut pairs = 0;
    for n in 1..=4 {
        let all = BoundaryWord::all_balanced(n);
        let expected = (1..=3 * n as u128).product::<u128>() / (1..=n as u128).product::<u128>().pow(3);
        ensure(all.len() as u128 == expected, format!("n={n}: {} words", all.len()))?;
        for v in &all {
            words += 1;
            let vs: Vec<u8> = v.to_string().chars().map(sym).collect();
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    let mut ws = vs.clone();
                    ws.swap(i, j);
                    let w: BoundaryWord =
                        ws.iter().map(|&x| ['-', '0', '+'][x as usize]).collect::<String>().parse().unwrap();
                    let covered = vs[i] > vs[j];
                    ensure(w.prec(v) == covered, format!("prec on {w} {v}"))?;
                    if covered {
                        pairs += 1;
                        ensure(inversions_by_hand(&ws) < inversions_by_hand(&vs), format!("{w} ≺ {v}"))?;
                        ensure(w.inversions() < v.inversions(), format!("library Inv on {w} ≺ {v}"))?;
                    }
                }
            }
        }
    }
    Ok(format!("{words} words, {pairs} pairs w ≺ v, 0 counterexamples"))
}

fn perm_of(t: &Tableau) -> Vec<usize> {
    // the box of T0 holding e carries T's entry
    (1..=3 * t.n()).map(|e| t.entry((e - 1) % 3, (e - 1) / 3) - 1).collect()
}

fn length(p: &[usize]) -> usize {
    (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count()
}

fn inverse(p: &[usize]) -> Vec<usize> {
    let mut q = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        q[x] = i;
    }
    q
}

// (p then q)(x) = q(p(x)) and its mirror
fn compositions(p: &[usize], q: &[usize]) -> [Vec<usize>; 2] {
    [p.iter().map(|&x| q[x]).collect(), q.iter().map(|&x| p[x]).collect()]
}

// 9. the pair from the remark
fn criterion_9() -> Outcome {
    let t = Tableau::from_rows(&[vec![1, 3, 6], vec![2, 4, 8], vec![5, 7, 9]]).unwrap();
    let s = Tableau::from_rows(&[vec![1, 3, 4], vec![2, 6, 8], vec![5, 7, 9]]).unwrap();
    let basis = SpechtBasis::new(3).unwrap();
    let prec = basis.poset(OrderKind::PrecClosure).unwrap();
    let (it, is) = (prec.index_of(&t).unwrap(), prec.index_of(&s).unwrap());
    let all: Vec<Tableau> = basis.order().to_vec();
    let by_hand = prec_star_by_hand(&all);
    let (ht, hs) = (all.iter().position(|x| *x == t).unwrap(), all.iter().position(|x| *x == s).unwrap());
    ensure(prec.lt(it, is) && by_hand[ht][hs], "T ≺* S")?;
    ensure(!t.leq_weak(&s).unwrap() && !s.leq_weak(&t).unwrap(), "library weak order compares them")?;
    // length additivity fails both ways under either composition convention
    let (pt, ps) = (perm_of(&t), perm_of(&s));
    for (a, b) in [(&pt, &ps), (&ps, &pt)] {
        for tau in compositions(&inverse(a), b) {
            ensure(length(b) != length(a) + length(&tau), "weak comparability by hand")?;
        }
    }
    Ok("T ≺* S, T and S weak-incomparable".into())
}

// 10. property checks at desk scale
fn criterion_10() -> Outcome {
    let mut notes = Vec::new();

    // (a) confluence
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for n in 1..=3 {
        for k in 0..200 {
            let web = crossing_diagram_of_fork(&ForkDiagram::random(n, &mut rng));
            let base = reduce(&web);
            for s in 0..3u64 {
                let seed = rng.gen::<u64>() ^ (k * 3 + s);
                ensure(reduce_with(&web, Schedule::Seeded(seed)) == base, format!("n={n}: schedule {seed}"))?;
            }
        }
    }
    notes.push("(a) 600 diagrams x 3 schedules confluent".to_string());

    // (b) the two expansion routes
    let mut compared = 0;
    for n in 1..=3 {
        let basis = SpechtBasis::new(n).unwrap();
        let mw = basis.transition_matrix(BasisTag::M, BasisTag::W).unwrap();
        let ds = if n <= 2 {
            ForkDiagram::all(n)
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(500);
            (0..500).map(|_| ForkDiagram::random(n, &mut rng)).collect()
        };
        for x in &ds {
            let v = basis.m_coordinates(&expand_in_m(x)).unwrap();
            let via_m: Vec<BigInt> =
                (0..basis.dim()).map(|r| (0..basis.dim()).map(|c| mw.entry(r, c) * &v[c]).sum()).collect();
            ensure(via_m == basis.w_coordinates(&expand_via_webs(x)).unwrap(), format!("routes differ on {x}"))?;
            compared += 1;
        }
    }
    notes.push(format!("(b) {compared} diagrams agree across routes"));

    // (c) Coxeter relations
    for n in 1..=3 {
        let r = check_representation(n).unwrap();
        ensure(r.passed(), r.to_string())?;
    }
    notes.push("(c) Coxeter relations hold for n <= 3".to_string());

    // (d) the measure is asserted inside the expansion; drive it with
    // random choices over every diagram with n <= 3
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut rewrites = 0;
    for n in 1..=3 {
        for x in ForkDiagram::all(n) {
            let (y, stats) = expand_in_m_with(&x, |_, pairs| rng.gen_range(0..pairs.len()));
            ensure(y == expand_in_m(&x), format!("choice-dependent expansion of {x}"))?;
            rewrites += stats.rewrites;
        }
    }
    notes.push(format!("(d) {rewrites} rewrites, measure decreased on every term"));
    Ok(notes.join("; "))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("local identities", criterion_1),
        ("example table", criterion_2),
        ("dimension counts", criterion_3),
        ("M-diagrams form a basis", criterion_4),
        ("unitriangular transitions", criterion_5),
        ("loop and bigon factors", criterion_6),
        ("Reidemeister moves", criterion_7),
        ("inversions along ≺", criterion_8),
        ("remark pair", criterion_9),
        ("property checks", criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let result = std::panic::catch_unwind(f).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
