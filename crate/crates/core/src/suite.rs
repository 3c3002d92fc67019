//! The self-check suite behind `sl3-specht check n`.

use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::diagram::ForkDiagram;
use crate::error::Result;
use crate::lincomb::LinComb;
use crate::order::OrderKind;
use crate::specht::{
    check_representation, expand_in_m, expand_in_m_with, expand_via_webs, generator_matrix, BasisTag, SpechtBasis,
    TransitionMatrix,
};
use crate::tableau::{hook_length_count, Tableau};
use crate::web::{act_web_term, crossing_diagram_of_fork, depth_word, reduce, reduce_with, Schedule};
use crate::word::BoundaryWord;

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub n: usize,
    pub seed: u64,
    /// Random diagrams for the oracle comparison when `n > 2`.
    pub samples: usize,
    /// Random diagrams for the confluence check.
    pub confluence: usize,
    /// Generator matrices and Coxeter relations.
    pub coxeter: bool,
}

impl SuiteOptions {
    pub fn new(n: usize) -> Self {
        Self { n, seed: 0, samples: 500, confluence: 200, coxeter: n <= 3 }
    }
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {:<14} {} ({} ms)", self.name, self.detail, self.millis)
    }
}

fn timed(name: &'static str, f: impl FnOnce() -> Result<(bool, String)>) -> Result<CheckOutcome> {
    let start = Instant::now();
    let (passed, detail) = f()?;
    Ok(CheckOutcome { name, passed, detail, millis: start.elapsed().as_millis() })
}

fn is_unit_column(m: &TransitionMatrix, c: usize) -> bool {
    (0..m.dim()).all(|r| if r == c { m.entry(r, c).is_one() } else { m.entry(r, c).is_zero() })
}

fn apply(m: &TransitionMatrix, v: &[BigInt]) -> Vec<BigInt> {
    m.entries.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

/// Diagrams to test: all of them for `n ≤ 2`, otherwise `count` seeded
/// samples.
pub fn sample_diagrams(n: usize, count: usize, seed: u64) -> Vec<ForkDiagram> {
    if n <= 2 {
        return ForkDiagram::all(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| ForkDiagram::random(n, &mut rng)).collect()
}

/// Runs every check for one `n`. Errors only on invalid input; failed
/// checks are reported in the outcomes.
pub fn run_suite(opts: &SuiteOptions) -> Result<Vec<CheckOutcome>> {
    let n = opts.n;
    let basis = SpechtBasis::new(n)?;
    let mut out = Vec::new();

    out.push(timed("dimension", || {
        let count = Tableau::enumerate(n)?.len();
        let hook = hook_length_count(n);
        Ok((count as u128 == hook, format!("{count} tableaux, hook length formula {hook}")))
    })?);

    out.push(timed("web-words", || {
        let bad = basis.webs().iter().zip(basis.order()).filter(|(w, t)| depth_word(w).ok() != t.word().ok()).count();
        Ok((bad == 0, format!("{} basis webs, {bad} with the wrong depth word", basis.dim())))
    })?);

    let mut matrices = Vec::new();
    for from in BasisTag::ALL {
        for to in BasisTag::ALL {
            if from != to {
                matrices.push(basis.transition_matrix(from, to)?);
            }
        }
    }
    let get = |from, to| matrices.iter().find(|m| m.from == from && m.to == to).expect("all pairs");

    out.push(timed("basis", || {
        let pm = get(BasisTag::P, BasisTag::M);
        let det = pm.determinant();
        Ok((pm.diagonal_is_one() && (det == BigInt::one() || det == -BigInt::one()), format!("det(P->M) = {det}")))
    })?);

    out.push(timed("unitriangular", || {
        let prec = basis.poset(OrderKind::PrecClosure)?;
        let weak = basis.poset(OrderKind::Weak)?;
        let mut ok = true;
        let mut parts = Vec::new();
        for m in &matrices {
            ok &= m.is_unitriangular(&prec);
            parts.push(format!("{}->{} {}/{}", m.from, m.to, m.violations(&prec).len(), m.violations(&weak).len()));
        }
        Ok((ok, format!("violations under prec*/weak: {}", parts.join(", "))))
    })?);

    out.push(timed("composition", || {
        let composed = get(BasisTag::M, BasisTag::W).compose(get(BasisTag::P, BasisTag::M))?;
        Ok((composed == *get(BasisTag::P, BasisTag::W), "P->W equals (M->W)(P->M)".into()))
    })?);

    out.push(timed("t0-column", || {
        let ok = matrices.iter().all(|m| is_unit_column(m, 0));
        Ok((ok, "v0 = m0 = W0 in every matrix".into()))
    })?);

    out.push(timed("idempotent", || {
        let bad = basis.m_diagrams().iter().filter(|m| expand_in_m(m) != LinComb::single((*m).clone())).count();
        Ok((bad == 0, format!("{} M-diagrams, {bad} moved", basis.dim())))
    })?);

    let diagrams = sample_diagrams(n, opts.samples, opts.seed);

    out.push(timed("measure", || {
        let mut rewrites = 0;
        let mut terms = 0;
        for d in &diagrams {
            // the expansion asserts the decrease on every produced term
            let (_, stats) = expand_in_m_with(d, |_, pairs| pairs.len() - 1);
            rewrites += stats.rewrites;
            terms += stats.measured_terms;
        }
        Ok((true, format!("{rewrites} rewrites, {terms} produced terms, (Inv, c) decreased on each")))
    })?);

    out.push(timed("oracle", || {
        let mw = get(BasisTag::M, BasisTag::W);
        let mut bad = 0;
        for d in &diagrams {
            let via_m = apply(mw, &basis.m_coordinates(&expand_in_m(d))?);
            if via_m != basis.w_coordinates(&expand_via_webs(d))? {
                bad += 1;
            }
        }
        Ok((bad == 0, format!("{} diagrams, {bad} disagreements", diagrams.len())))
    })?);

    out.push(timed("confluence", || {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5eed);
        let mut bad = 0;
        for k in 0..opts.confluence {
            let web = crossing_diagram_of_fork(&ForkDiagram::random(n, &mut rng));
            let base = reduce(&web);
            let seed = opts.seed.wrapping_add(k as u64);
            if reduce_with(&web, Schedule::Seeded(seed)) != base {
                bad += 1;
            }
        }
        Ok((bad == 0, format!("{} diagrams, {bad} schedule-dependent", opts.confluence)))
    })?);

    out.push(timed("inversions", || {
        let mut pairs = 0;
        let mut bad = 0;
        for v in BoundaryWord::all_balanced(n) {
            for w in v.prec_predecessors() {
                pairs += 1;
                if w.inversions() >= v.inversions() {
                    bad += 1;
                }
            }
        }
        Ok((bad == 0, format!("{pairs} covering pairs, {bad} counterexamples")))
    })?);

    if opts.coxeter {
        out.push(timed("coxeter", || {
            let r = check_representation(n)?;
            Ok((r.passed(), r.to_string()))
        })?);

        out.push(timed("web-action", || {
            // the action on M-diagrams and on webs agree through M->W
            let mw = get(BasisTag::M, BasisTag::W);
            let wm = get(BasisTag::W, BasisTag::M);
            let mut bad = 0;
            for i in 1..3 * n {
                let gm = generator_matrix(&basis, i)?;
                for (c, w) in basis.webs().iter().enumerate() {
                    let lhs = basis.w_coordinates(&act_web_term(w, i)?)?;
                    let in_m: Vec<BigInt> = (0..basis.dim()).map(|r| wm.entry(r, c).clone()).collect();
                    let rhs = apply(mw, &apply(&gm, &in_m));
                    if lhs != rhs {
                        bad += 1;
                    }
                }
            }
            Ok((bad == 0, format!("{bad} generator/web pairs disagree")))
        })?);
    }

    Ok(out)
}
