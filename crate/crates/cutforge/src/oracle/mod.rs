//! Brute-force recomputation of segment operations on finite windows.
//!
//! Each operation is rebuilt from its set definition with quantifiers
//! bounded to the box `[-m, m]^n` and compared with the symbolic answer at
//! test points of the margin box. The oracle only ever asks whether a point
//! lies in a canonical triple; it never calls segment arithmetic.
//!
//! Bounded quantifiers are evaluated exactly. A final segment is upward
//! closed and the lex order is total, so "some `s ∈ S` in the box with
//! `P(g - s)`" for a downward closed `P` holds iff it holds at the least
//! element of `S` in the box, and that element is found coordinate by
//! coordinate.

pub mod battery;
mod lattice;

use std::fmt;

use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::lexgroup::{GroupElement, GroupSignature};
use crate::segcalc::{enumerate_segments, solve, FinalSegment, Sampler, SolveOutcome};
use lattice::{add, lex_ge, neg, sub, Cut, Lattice, Pt};

pub use lattice::MAX_RANK;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowSpec {
    /// `m`: witnesses range over `[-m, m]^n`.
    pub radius: i64,
    /// Test points stay within `[-m·margin, m·margin]^n`.
    pub margin: Rational64,
    /// Random instances per operation when a Q factor is present.
    pub samples: usize,
    pub seed: u64,
    /// Largest denominator of sampled Q values.
    pub denom_bound: u32,
}

impl Default for WindowSpec {
    fn default() -> Self {
        WindowSpec { radius: 12, margin: Rational64::new(1, 2), samples: 10_000, seed: 0, denom_bound: 6 }
    }
}

impl WindowSpec {
    pub fn with_radius(radius: i64) -> Self {
        WindowSpec { radius, ..Self::default() }
    }

    fn lattice(&self, sig: &GroupSignature) -> Result<Lattice> {
        Lattice::new(sig, self.radius, self.margin, self.denom_bound)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Exhaustive,
    Randomized,
}

impl Mode {
    pub fn for_signature(sig: &GroupSignature) -> Self {
        if sig.is_all_int() {
            Mode::Exhaustive
        } else {
            Mode::Randomized
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Randomized => "randomized",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Add,
    Delta,
    NegComplement,
    Msub,
    Cdiff,
    Ms,
    Hat,
    Dhat,
    InvGroup,
    Push,
    Pull,
    Subset,
    Solve,
}

impl Op {
    pub const ALL: [Op; 13] = [
        Op::Add,
        Op::Delta,
        Op::NegComplement,
        Op::Msub,
        Op::Cdiff,
        Op::Ms,
        Op::Hat,
        Op::Dhat,
        Op::InvGroup,
        Op::Push,
        Op::Pull,
        Op::Subset,
        Op::Solve,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Op::Add => "add",
            Op::Delta => "delta",
            Op::NegComplement => "neg_complement",
            Op::Msub => "msub",
            Op::Cdiff => "cdiff",
            Op::Ms => "ms",
            Op::Hat => "hat",
            Op::Dhat => "dhat",
            Op::InvGroup => "inv_group",
            Op::Push => "push",
            Op::Pull => "pull",
            Op::Subset => "subset",
            Op::Solve => "solve",
        }
    }

    pub fn parse(name: &str) -> Option<Op> {
        Op::ALL.into_iter().find(|op| op.name() == name)
    }

    fn binary(self) -> bool {
        matches!(self, Op::Add | Op::Msub | Op::Cdiff | Op::Ms | Op::Subset | Op::Solve)
    }

    fn takes_level(self) -> bool {
        matches!(self, Op::Push | Op::Pull)
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub inputs: String,
    /// `None` when the disagreement is not about a single point.
    pub point: Option<String>,
    pub expected: String,
    pub got: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.inputs)?;
        if let Some(p) = &self.point {
            write!(f, " at {p}")?;
        }
        write!(f, ": oracle {}, computed {}", self.expected, self.got)
    }
}

/// Failures beyond this many are counted but not kept.
pub const KEPT_FAILURES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgreementReport {
    pub op: Op,
    pub signature: String,
    pub mode: Mode,
    pub instances: usize,
    /// Membership comparisons made.
    pub comparisons: u64,
    pub failure_count: usize,
    pub failures: Vec<Failure>,
}

impl AgreementReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn merge(&mut self, other: Chunk) {
        self.instances += other.instances;
        self.comparisons += other.comparisons;
        self.failure_count += other.failures.len();
        for f in other.failures {
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(f);
            }
        }
    }
}

impl fmt::Display for AgreementReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "pass" } else { "FAIL" };
        write!(
            f,
            "{verdict} {:<14} over {} ({}): {} instances, {} comparisons, {} failures",
            self.op.name(),
            self.signature,
            self.mode.name(),
            self.instances,
            self.comparisons,
            self.failure_count
        )?;
        for x in &self.failures {
            write!(f, "\n    {x}")?;
        }
        Ok(())
    }
}

// --- single-query oracles ---------------------------------------------------

/// Is `g` in `S1 + S2`, with the witness `s1` searched over the box?
pub fn oracle_sum_member(s1: &FinalSegment, s2: &FinalSegment, g: &GroupElement, w: &WindowSpec) -> Result<bool> {
    s1.signature().ensure_same(s2.signature())?;
    let lat = w.lattice(s1.signature())?;
    let g = lat.check_point(g)?;
    let (a, b) = (Prepared::new(&lat, s1.clone())?, Prepared::new(&lat, s2.clone())?);
    Ok(a.sum_with(&b.cut, &g))
}

/// Does `S + gamma = S` hold at every test point of the margin box?
///
/// All-Z groups use every point; otherwise `w.samples` random points and the
/// points near the anchor are used.
pub fn oracle_inv_shift(s: &FinalSegment, gamma: &GroupElement, w: &WindowSpec) -> Result<bool> {
    s.signature().ensure_same(gamma.signature())?;
    let lat = w.lattice(s.signature())?;
    let cut = lat.cut(s)?;
    let shift = lat.point(gamma.coords())?;
    let points = window_points(&lat, &[cut.anchor], w.samples, &mut ChaCha8Rng::seed_from_u64(w.seed));
    Ok(points.iter().all(|g| cut.member(g) == cut.member(&sub(g, &shift))))
}

/// Is `alpha + S1 ⊆ S2`, testing every `s1 ∈ S1` of the box?
pub fn oracle_ms_member(s1: &FinalSegment, s2: &FinalSegment, alpha: &GroupElement, w: &WindowSpec) -> Result<bool> {
    s1.signature().ensure_same(s2.signature())?;
    let lat = w.lattice(s1.signature())?;
    let alpha = lat.check_point(alpha)?;
    let a = Prepared::new(&lat, s1.clone())?;
    let cut2 = lat.cut(s2)?;
    Ok(a.min1.is_none_or(|mu| cut2.member(&add(&alpha, &mu))))
}

/// Is `x >= -s` for every `s ∈ S` of the box?
pub fn oracle_delta_member(s: &FinalSegment, x: &GroupElement, w: &WindowSpec) -> Result<bool> {
    let lat = w.lattice(s.signature())?;
    let x = lat.check_point(x)?;
    let a = Prepared::new(&lat, s.clone())?;
    Ok(a.delta_at(&x, 1))
}

// --- per-segment data -------------------------------------------------------

struct Prepared {
    seg: FinalSegment,
    cut: Cut,
    /// Least element of `S` in the witness box.
    min1: Option<Pt>,
    /// Least element of `S` in the box three times as wide on the finer
    /// grid, for quantifiers nested one level deeper.
    min3: Option<Pt>,
}

impl Prepared {
    fn new(lat: &Lattice, seg: FinalSegment) -> Result<Self> {
        let cut = lat.cut(&seg)?;
        let min1 = lat.box_min(lat.n, 1, false, |p| cut.member(p));
        let min3 = lat.box_min(lat.n, 3, true, |p| cut.member(p));
        Ok(Prepared { seg, cut, min1, min3 })
    }

    fn n(&self) -> usize {
        self.seg.signature().rank()
    }

    /// `g ∈ S + T` for the segment `T` given by `other`.
    fn sum_with(&self, other: &Cut, g: &Pt) -> bool {
        self.min1.is_some_and(|mu| other.member(&sub(g, &mu)))
    }

    fn delta_at(&self, x: &Pt, mult: i64) -> bool {
        let mu = if mult == 1 { self.min1 } else { self.min3 };
        mu.is_none_or(|mu| lex_ge(x, &neg(&mu), self.n()))
    }
}

/// Level `k` of the invariance group `H_k`, read off from which unit
/// shifts leave `S` unchanged on the points.
fn oracle_level(lat: &Lattice, cut: &Cut, points: &[Pt]) -> usize {
    (1..=lat.n)
        .find(|&i| {
            let e = lat.unit(i - 1);
            points.iter().all(|g| cut.member(g) == cut.member(&sub(g, &e)))
        })
        .map_or(lat.n, |i| i - 1)
}

/// Does `S/H_k` have a least element? The least box element of the image
/// must be an interior test point; a limit from the right shows up one
/// witness step off the test lattice.
fn oracle_quotient_principal(lat: &Lattice, cut: &Cut, k: usize) -> bool {
    match lat.box_min(k, 1, false, |p| cut.member(p)) {
        Some(mu) => {
            let mut prefix = mu;
            for v in prefix.iter_mut().skip(k) {
                *v = 0;
            }
            lat.in_margin(&prefix) && lat.on_test_lattice(&mu, k)
        }
        None => false,
    }
}

fn window_points(lat: &Lattice, anchors: &[Pt], samples: usize, rng: &mut ChaCha8Rng) -> Vec<Pt> {
    if lat.sig.is_all_int() {
        return lat.all_test_points();
    }
    let mut pts = lat.critical_points(anchors);
    pts.extend((0..samples).map(|_| lat.random_point(rng)));
    pts
}

// --- agreement checks -------------------------------------------------------

struct Chunk {
    instances: usize,
    comparisons: u64,
    failures: Vec<Failure>,
}

struct Ctx<'a> {
    lat: &'a Lattice,
    points: &'a [Pt],
    comparisons: u64,
    failures: Vec<Failure>,
}

impl Ctx<'_> {
    fn fail(&mut self, inputs: impl FnOnce() -> String, point: Option<Pt>, expected: String, got: String) {
        let point = point.map(|p| self.lat.element(&p).to_string());
        self.failures.push(Failure { inputs: inputs(), point, expected, got });
    }

    /// Compares a symbolic segment with an oracle predicate on every point;
    /// records the first disagreement.
    fn agree(&mut self, inputs: &dyn Fn() -> String, computed: &Cut, oracle: impl Fn(&Pt) -> bool) -> bool {
        for g in self.points {
            self.comparisons += 1;
            let (want, got) = (oracle(g), computed.member(g));
            if want != got {
                let g = *g;
                self.fail(inputs, Some(g), want.to_string(), got.to_string());
                return false;
            }
        }
        true
    }

    fn cut_or_fail(&mut self, inputs: &dyn Fn() -> String, r: Result<FinalSegment>) -> Option<(FinalSegment, Cut)> {
        match r.and_then(|s| self.lat.cut(&s).map(|c| (s, c))) {
            Ok(x) => Some(x),
            Err(e) => {
                self.fail(inputs, None, "a segment".into(), format!("error: {e}"));
                None
            }
        }
    }
}

struct Instance<'a> {
    a: &'a Prepared,
    b: Option<&'a Prepared>,
    k: usize,
}

fn check_instance(op: Op, inst: &Instance<'_>, ctx: &mut Ctx<'_>) {
    let lat = ctx.lat;
    let a = inst.a;
    let describe = || match (inst.b, op.takes_level()) {
        (Some(b), _) => format!("{op}({}, {})", a.seg, b.seg),
        (None, true) => format!("{op}({}, {})", a.seg, inst.k),
        (None, false) => format!("{op}({})", a.seg),
    };
    let n = lat.n;
    match op {
        Op::Add => {
            let b = inst.b.expect("binary");
            if let Some((_, c)) = ctx.cut_or_fail(&describe, a.seg.add(&b.seg)) {
                ctx.agree(&describe, &c, |g| a.sum_with(&b.cut, g));
            }
        }
        Op::Delta => {
            let c = lat.cut(&a.seg.delta()).expect("negated anchors stay on the lattice");
            ctx.agree(&describe, &c, |g| a.delta_at(g, 1));
        }
        Op::NegComplement => {
            let c = lat.cut(&a.seg.neg_complement()).expect("negated anchors stay on the lattice");
            ctx.agree(&describe, &c, |g| !a.cut.member(&neg(g)));
        }
        Op::Msub => {
            // S2 ⊖ S1 = S2 + Δ⁻S1; the inner quantifier needs the wider box
            let (s2, s1) = (a, inst.b.expect("binary"));
            if let Some((_, c)) = ctx.cut_or_fail(&describe, s2.seg.msub(&s1.seg)) {
                ctx.agree(&describe, &c, |g| s2.min1.is_some_and(|mu| s1.delta_at(&sub(g, &mu), 3)));
            }
        }
        Op::Cdiff => {
            let (s2, s1) = (a, inst.b.expect("binary"));
            if let Some((_, c)) = ctx.cut_or_fail(&describe, s2.seg.cdiff(&s1.seg)) {
                ctx.agree(&describe, &c, |g| s2.min1.is_some_and(|mu| !s1.cut.member(&sub(&mu, g))));
            }
        }
        Op::Ms => {
            let (s2, s1) = (a, inst.b.expect("binary"));
            if let Some((_, c)) = ctx.cut_or_fail(&describe, s2.seg.ms(&s1.seg)) {
                ctx.agree(&describe, &c, |alpha| s1.min1.is_none_or(|mu| s2.cut.member(&add(alpha, &mu))));
            }
        }
        Op::Hat => {
            let c = lat.cut(&a.seg.hat()).expect("same anchor");
            let dense = lat.is_rat(n - 1);
            let step = lat.step(n - 1);
            ctx.agree(&describe, &c, |g| a.cut.member(g) || (dense && a.cut.member(&add(g, &step))));
        }
        Op::Dhat => {
            let k = oracle_level(lat, &a.cut, ctx.points);
            let c = lat.cut(&a.seg.dhat()).expect("same anchor");
            let dense = k >= 1 && lat.is_rat(k - 1);
            let step = if k >= 1 { lat.step(k - 1) } else { [0; MAX_RANK] };
            ctx.agree(&describe, &c, |g| a.cut.member(g) || (dense && a.cut.member(&add(g, &step))));
        }
        Op::InvGroup => {
            ctx.comparisons += 1;
            let (want, got) = (oracle_level(lat, &a.cut, ctx.points), a.seg.inv_group().level());
            if want != got {
                ctx.fail(describe, None, format!("H({want})"), format!("H({got})"));
            }
        }
        Op::Push | Op::Pull => {
            let k = inst.k;
            let pushed = a.seg.push_quotient(k);
            let r = if op == Op::Push { pushed } else { pushed.and_then(|p| p.pull_quotient(&lat.sig)) };
            if let Some((_, c)) = ctx.cut_or_fail(&describe, r) {
                ctx.agree(&describe, &c, |g| a.cut.member(&lat.with_top_tail(g, k, 1)));
            }
        }
        Op::Subset => {
            let b = inst.b.expect("binary");
            ctx.comparisons += ctx.points.len() as u64;
            let want = ctx.points.iter().all(|g| !a.cut.member(g) || b.cut.member(g));
            let got = a.seg.subset(&b.seg).expect("same signature");
            if want != got {
                ctx.fail(describe, None, want.to_string(), got.to_string());
            }
        }
        Op::Solve => check_solve(inst, ctx, &describe),
    }
}

fn check_solve(inst: &Instance<'_>, ctx: &mut Ctx<'_>, describe: &dyn Fn() -> String) {
    let lat = ctx.lat;
    let n = lat.n;
    let (s1, s2) = (inst.a, inst.b.expect("binary"));
    let out = match solve(&s1.seg, &s2.seg) {
        Ok(o) => o,
        Err(e) => return ctx.fail(describe, None, "an outcome".into(), format!("error: {e}")),
    };

    // the label from oracle-derived levels and flavors
    let k1 = oracle_level(lat, &s1.cut, ctx.points);
    let k2 = oracle_level(lat, &s2.cut, ctx.points);
    let f1_geq = oracle_quotient_principal(lat, &s1.cut, k1);
    let f2_geq = oracle_quotient_principal(lat, &s2.cut, k2);
    let want = if k1 == n && f1_geq {
        "unique"
    } else if k1 >= k2 && !(k1 == k2 && !f1_geq && f2_geq) {
        "largest"
    } else {
        "no-solution"
    };
    ctx.comparisons += 1;
    if want != out.label() {
        return ctx.fail(describe, None, want.into(), out.label().into());
    }

    match &out {
        SolveOutcome::Unique(t) | SolveOutcome::Largest(t) => {
            let Some((_, tc)) = ctx.cut_or_fail(describe, Ok(t.clone())) else {
                return;
            };
            if s1.seg.add(t).ok().as_ref() != Some(&s2.seg) {
                return ctx.fail(describe, None, format!("S1 + T = {}", s2.seg), format!("T = {t}"));
            }
            if !ctx.agree(describe, &s2.cut, |g| s1.sum_with(&tc, g)) {
                return;
            }
            // every solution lies in {alpha : alpha + S1 ⊆ S2}, so agreeing
            // with that set makes T the largest one
            ctx.agree(describe, &tc, |alpha| s1.min1.is_none_or(|mu| s2.cut.member(&add(alpha, &mu))));
        }
        SolveOutcome::NoSolution { s2_prime, t_max } => {
            let Some((_, pc)) = ctx.cut_or_fail(describe, Ok(s2_prime.clone())) else {
                return;
            };
            let Some((_, tc)) = ctx.cut_or_fail(describe, Ok(t_max.clone())) else {
                return;
            };
            let strict = s2_prime.subset(&s2.seg).unwrap_or(false) && *s2_prime != s2.seg;
            let exact = s1.seg.add(t_max).ok().as_ref() == Some(s2_prime);
            let same_ms = s2.seg.ms(&s1.seg).ok() == s2_prime.ms(&s1.seg).ok();
            if !(strict && exact && same_ms) {
                return ctx.fail(describe, None, "S1 + tmax = s2' ⊊ S2".into(), out.to_string());
            }
            if !ctx.agree(describe, &pc, |g| s1.sum_with(&tc, g)) {
                return;
            }
            ctx.agree(describe, &tc, |alpha| s1.min1.is_none_or(|mu| s2.cut.member(&add(alpha, &mu))));
        }
    }
}

fn run_chunks<F>(total: usize, work: F) -> Vec<Chunk>
where
    F: Fn(std::ops::Range<usize>) -> Chunk + Sync + Copy + Send,
{
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(total.max(1));
    let per = total.div_ceil(threads.max(1)).max(1);
    if threads <= 1 {
        // also the path on targets without threads
        return vec![work(0..total)];
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> =
            (0..total).step_by(per).map(|lo| scope.spawn(move || work(lo..(lo + per).min(total)))).collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    })
}

/// Compares `op` with the oracle on every instance built from segments with
/// anchor coordinates in `[-anchor_bound, anchor_bound]`.
///
/// All-Z groups enumerate every canonical segment (all ordered pairs for
/// binary operations) and test every margin point. With a Q factor,
/// `w.samples` instances are drawn, instance `i` from the stream `i` of
/// `w.seed`, so the report does not depend on the thread count.
pub fn check_agreement(op: Op, sig: &GroupSignature, anchor_bound: i64, w: &WindowSpec) -> Result<AgreementReport> {
    let lat = w.lattice(sig)?;
    let mode = Mode::for_signature(sig);
    let mut report = AgreementReport {
        op,
        signature: sig.to_string(),
        mode,
        instances: 0,
        comparisons: 0,
        failure_count: 0,
        failures: Vec::new(),
    };
    let n = sig.rank();
    let chunks = match mode {
        Mode::Exhaustive => {
            let segs: Vec<Prepared> = enumerate_segments(sig, anchor_bound, 1)
                .into_iter()
                .map(|s| Prepared::new(&lat, s))
                .collect::<Result<_>>()?;
            let points = lat.all_test_points();
            let m = segs.len();
            let total = if op.binary() {
                m * m
            } else if op.takes_level() {
                m * n
            } else {
                m
            };
            let (segs, points, lat) = (&segs, &points, &lat);
            run_chunks(total, move |range| {
                let mut ctx = Ctx { lat, points, comparisons: 0, failures: Vec::new() };
                let len = range.len();
                for idx in range {
                    let inst = if op.binary() {
                        Instance { a: &segs[idx / m], b: Some(&segs[idx % m]), k: 0 }
                    } else if op.takes_level() {
                        Instance { a: &segs[idx / n], b: None, k: idx % n + 1 }
                    } else {
                        Instance { a: &segs[idx], b: None, k: 0 }
                    };
                    check_instance(op, &inst, &mut ctx);
                }
                Chunk { instances: len, comparisons: ctx.comparisons, failures: ctx.failures }
            })
        }
        Mode::Randomized => {
            let lat = &lat;
            run_chunks(w.samples, move |range| {
                let mut chunk = Chunk { instances: 0, comparisons: 0, failures: Vec::new() };
                for idx in range {
                    let r = random_instance(op, lat, anchor_bound, w, idx as u64, &mut chunk);
                    if let Err(e) = r {
                        chunk.failures.push(Failure {
                            inputs: format!("{op} instance {idx}"),
                            point: None,
                            expected: "a representable instance".into(),
                            got: format!("error: {e}"),
                        });
                    }
                }
                chunk
            })
        }
    };
    for c in chunks {
        report.merge(c);
    }
    Ok(report)
}

const RANDOM_POINTS: usize = 48;

fn random_instance(
    op: Op,
    lat: &Lattice,
    anchor_bound: i64,
    w: &WindowSpec,
    idx: u64,
    chunk: &mut Chunk,
) -> Result<()> {
    let n = lat.n;
    let mut sampler = Sampler::new(&lat.sig, anchor_bound, w.denom_bound, w.seed, idx);
    let a = Prepared::new(lat, sampler.segment())?;
    let b = if op.binary() { Some(Prepared::new(lat, sampler.segment())?) } else { None };
    let k = if op.takes_level() { sampler.rng().gen_range(1..=n) } else { 0 };
    let mut anchors = vec![a.cut.anchor];
    if let Some(b) = &b {
        anchors.push(b.cut.anchor);
    }
    let points = window_points(lat, &anchors, RANDOM_POINTS, sampler.rng());
    let mut ctx = Ctx { lat, points: &points, comparisons: 0, failures: Vec::new() };
    check_instance(op, &Instance { a: &a, b: b.as_ref(), k }, &mut ctx);
    chunk.instances += 1;
    chunk.comparisons += ctx.comparisons;
    chunk.failures.extend(ctx.failures);
    Ok(())
}

/// Reports at radius `m` and `2m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneReport {
    pub at_m: AgreementReport,
    pub at_2m: AgreementReport,
}

impl MonotoneReport {
    /// A pass at `m` must stay a pass at `2m`.
    pub fn holds(&self) -> bool {
        !self.at_m.passed() || self.at_2m.passed()
    }
}

pub fn check_monotone(op: Op, sig: &GroupSignature, anchor_bound: i64, w: &WindowSpec) -> Result<MonotoneReport> {
    let wide = WindowSpec { radius: 2 * w.radius, ..*w };
    Ok(MonotoneReport {
        at_m: check_agreement(op, sig, anchor_bound, w)?,
        at_2m: check_agreement(op, sig, anchor_bound, &wide)?,
    })
}

#[cfg(test)]
mod tests;
