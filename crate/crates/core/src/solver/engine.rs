//! Clause engine over two-colored variables.
//!
//! A literal says "variable `v` has color `c`"; a clause is satisfied when
//! one of its literals holds. Both partition problems reduce to 3-literal
//! clauses of this form, and verifiers add short side constraints.
//!
//! `solve` is a conflict-driven search with first-UIP learning and Luby
//! restarts. Decisions take the unassigned variable with the highest
//! activity, seeded by its number of constraints, ties to the lowest index,
//! and always try red first. `enumerate` is a plain propagating depth-first
//! search in variable order, which yields solutions in lexicographic order.

use super::Color;

#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Lit(u32);

impl Lit {
    pub fn new(var: usize, color: Color) -> Self {
        Lit((var as u32) << 1 | color as u32)
    }

    pub fn red(var: usize) -> Self {
        Lit::new(var, Color::Red)
    }

    pub fn blue(var: usize) -> Self {
        Lit::new(var, Color::Blue)
    }

    pub fn var(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn color(self) -> Color {
        if self.0 & 1 == 0 {
            Color::Red
        } else {
            Color::Blue
        }
    }

    pub fn negate(self) -> Self {
        Lit(self.0 ^ 1)
    }

    fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug, Default)]
pub struct ConstraintSystem {
    var_count: usize,
    clauses: Vec<Vec<Lit>>,
    /// Set when an empty clause was added.
    trivially_false: bool,
}

/// Outcome of an enumeration run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub solutions: Vec<Vec<Color>>,
    /// The solution limit was reached before the search finished.
    pub truncated: bool,
    pub states: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct BudgetExceeded {
    pub budget: u64,
}

impl ConstraintSystem {
    pub fn new(var_count: usize) -> Self {
        ConstraintSystem {
            var_count,
            clauses: Vec::new(),
            trivially_false: false,
        }
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn clauses(&self) -> &[Vec<Lit>] {
        &self.clauses
    }

    /// Adds a clause; duplicate literals are merged and tautologies dropped.
    pub fn add_clause(&mut self, lits: &[Lit]) {
        let mut c: Vec<Lit> = lits.to_vec();
        c.sort_unstable();
        c.dedup();
        if c.windows(2).any(|w| w[0].var() == w[1].var()) {
            return;
        }
        assert!(c.iter().all(|l| l.var() < self.var_count), "literal out of range");
        if c.is_empty() {
            self.trivially_false = true;
        }
        self.clauses.push(c);
    }

    /// Checks a full assignment against every clause.
    pub fn satisfied_by(&self, colors: &[Color]) -> bool {
        !self.trivially_false
            && self
                .clauses
                .iter()
                .all(|c| c.iter().any(|l| colors[l.var()] == l.color()))
    }

    pub fn solve(&self) -> Option<Vec<Color>> {
        self.solve_with(&[])
    }

    /// Satisfying assignment extending `assumptions`, if any.
    pub fn solve_with(&self, assumptions: &[Lit]) -> Option<Vec<Color>> {
        if self.trivially_false {
            return None;
        }
        let model = Cdcl::new(self).search(assumptions)?;
        debug_assert!(self.satisfied_by(&model));
        Some(model)
    }

    /// All satisfying assignments in lexicographic order (red before blue,
    /// variable 0 most significant), stopping after `limit` solutions.
    /// Every visited search node counts against `budget`.
    pub fn enumerate(&self, limit: Option<usize>, budget: u64) -> Result<Enumeration, BudgetExceeded> {
        let mut out = Enumeration {
            solutions: Vec::new(),
            truncated: false,
            states: 0,
        };
        if self.trivially_false {
            return Ok(out);
        }
        let mut dfs = Dfs::new(self);
        for c in &self.clauses {
            if c.len() == 1 && !dfs.assign(c[0]) {
                return Ok(out);
            }
        }
        if !dfs.propagate() {
            return Ok(out);
        }
        dfs.run(0, limit, budget, &mut out)?;
        Ok(out)
    }
}

const UNASSIGNED: u8 = 2;
const NO_REASON: u32 = u32::MAX;

struct Cdcl {
    n: usize,
    clauses: Vec<Vec<Lit>>,
    watches: Vec<Vec<u32>>,
    value: Vec<u8>,
    level: Vec<u32>,
    reason: Vec<u32>,
    trail: Vec<Lit>,
    trail_lim: Vec<usize>,
    qhead: usize,
    activity: Vec<f64>,
    inc: f64,
    seen: Vec<bool>,
    units: Vec<Lit>,
}

impl Cdcl {
    fn new(sys: &ConstraintSystem) -> Self {
        let n = sys.var_count;
        let mut s = Cdcl {
            n,
            clauses: Vec::with_capacity(sys.clauses.len()),
            watches: vec![Vec::new(); 2 * n],
            value: vec![UNASSIGNED; n],
            level: vec![0; n],
            reason: vec![NO_REASON; n],
            trail: Vec::with_capacity(n),
            trail_lim: Vec::new(),
            qhead: 0,
            activity: vec![0.0; n],
            inc: 1.0,
            seen: vec![false; n],
            units: Vec::new(),
        };
        for c in &sys.clauses {
            for l in c {
                s.activity[l.var()] += 1.0;
            }
            if c.len() == 1 {
                s.units.push(c[0]);
            } else {
                s.attach(c.clone());
            }
        }
        s
    }

    fn attach(&mut self, c: Vec<Lit>) -> u32 {
        let idx = self.clauses.len() as u32;
        self.watches[c[0].index()].push(idx);
        self.watches[c[1].index()].push(idx);
        self.clauses.push(c);
        idx
    }

    fn lit_value(&self, l: Lit) -> Option<bool> {
        let v = self.value[l.var()];
        (v != UNASSIGNED).then(|| v == l.color() as u8)
    }

    fn decision_level(&self) -> u32 {
        self.trail_lim.len() as u32
    }

    fn enqueue(&mut self, l: Lit, reason: u32) {
        let v = l.var();
        self.value[v] = l.color() as u8;
        self.level[v] = self.decision_level();
        self.reason[v] = reason;
        self.trail.push(l);
    }

    fn propagate(&mut self) -> Option<u32> {
        while self.qhead < self.trail.len() {
            let p = self.trail[self.qhead];
            self.qhead += 1;
            let false_lit = p.negate();
            let ws = std::mem::take(&mut self.watches[false_lit.index()]);
            let mut kept = Vec::with_capacity(ws.len());
            let mut conflict = None;
            let mut i = 0;
            while i < ws.len() {
                let ci = ws[i];
                i += 1;
                let c = &mut self.clauses[ci as usize];
                if c[0] == false_lit {
                    c.swap(0, 1);
                }
                let first = c[0];
                if self.value[first.var()] == first.color() as u8 {
                    kept.push(ci);
                    continue;
                }
                let mut moved = false;
                for k in 2..c.len() {
                    let l = c[k];
                    let val = self.value[l.var()];
                    if val == UNASSIGNED || val == l.color() as u8 {
                        c.swap(1, k);
                        let w = c[1];
                        self.watches[w.index()].push(ci);
                        moved = true;
                        break;
                    }
                }
                if moved {
                    continue;
                }
                kept.push(ci);
                match self.lit_value(first) {
                    Some(false) => {
                        conflict = Some(ci);
                        kept.extend_from_slice(&ws[i..]);
                        break;
                    }
                    _ => self.enqueue(first, ci),
                }
            }
            self.watches[false_lit.index()] = kept;
            if conflict.is_some() {
                self.qhead = self.trail.len();
                return conflict;
            }
        }
        None
    }

    fn bump(&mut self, v: usize) {
        self.activity[v] += self.inc;
        if self.activity[v] > 1e100 {
            for a in &mut self.activity {
                *a *= 1e-100;
            }
            self.inc *= 1e-100;
        }
    }

    /// First-UIP clause and the level to jump back to.
    fn analyze(&mut self, mut confl: u32) -> (Vec<Lit>, u32) {
        let current = self.decision_level();
        let mut learnt = vec![Lit(0)];
        let mut pending = 0;
        let mut idx = self.trail.len();
        let mut p: Option<Lit> = None;
        loop {
            let clause = self.clauses[confl as usize].clone();
            for &q in &clause {
                if p.is_some_and(|p| p.var() == q.var()) {
                    continue;
                }
                let v = q.var();
                if !self.seen[v] && self.level[v] > 0 {
                    self.seen[v] = true;
                    self.bump(v);
                    if self.level[v] == current {
                        pending += 1;
                    } else {
                        learnt.push(q);
                    }
                }
            }
            loop {
                idx -= 1;
                if self.seen[self.trail[idx].var()] {
                    break;
                }
            }
            let lit = self.trail[idx];
            self.seen[lit.var()] = false;
            pending -= 1;
            p = Some(lit);
            if pending == 0 {
                break;
            }
            confl = self.reason[lit.var()];
        }
        learnt[0] = p.unwrap().negate();
        for l in &learnt[1..] {
            self.seen[l.var()] = false;
        }
        let mut back = 0;
        if learnt.len() > 1 {
            let mut best = 1;
            for k in 2..learnt.len() {
                if self.level[learnt[k].var()] > self.level[learnt[best].var()] {
                    best = k;
                }
            }
            learnt.swap(1, best);
            back = self.level[learnt[1].var()];
        }
        self.inc /= 0.95;
        (learnt, back)
    }

    fn backtrack(&mut self, lvl: u32) {
        if self.decision_level() <= lvl {
            return;
        }
        let keep = self.trail_lim[lvl as usize];
        for l in self.trail.drain(keep..) {
            self.value[l.var()] = UNASSIGNED;
            self.reason[l.var()] = NO_REASON;
        }
        self.trail_lim.truncate(lvl as usize);
        self.qhead = keep;
    }

    fn pick(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for v in 0..self.n {
            if self.value[v] == UNASSIGNED && best.is_none_or(|b| self.activity[v] > self.activity[b]) {
                best = Some(v);
            }
        }
        best
    }

    fn search(mut self, assumptions: &[Lit]) -> Option<Vec<Color>> {
        for l in std::mem::take(&mut self.units) {
            match self.lit_value(l) {
                Some(false) => return None,
                Some(true) => {}
                None => self.enqueue(l, NO_REASON),
            }
        }
        if self.propagate().is_some() {
            return None;
        }
        let mut restart = 1u32;
        let mut conflicts_left = luby(restart) * 100;
        loop {
            if let Some(confl) = self.propagate() {
                if self.decision_level() == 0 {
                    return None;
                }
                let (learnt, back) = self.analyze(confl);
                self.backtrack(back);
                if learnt.len() == 1 {
                    self.enqueue(learnt[0], NO_REASON);
                } else {
                    let asserting = learnt[0];
                    let ci = self.attach(learnt);
                    self.enqueue(asserting, ci);
                }
                conflicts_left = conflicts_left.saturating_sub(1);
                continue;
            }
            if conflicts_left == 0 {
                restart += 1;
                conflicts_left = luby(restart) * 100;
                self.backtrack(0);
                continue;
            }
            let lvl = self.decision_level() as usize;
            if lvl < assumptions.len() {
                let a = assumptions[lvl];
                self.trail_lim.push(self.trail.len());
                match self.lit_value(a) {
                    Some(true) => {}
                    Some(false) => return None,
                    None => self.enqueue(a, NO_REASON),
                }
                continue;
            }
            match self.pick() {
                None => {
                    return Some(
                        self.value
                            .iter()
                            .map(|&c| if c == 0 { Color::Red } else { Color::Blue })
                            .collect(),
                    )
                }
                Some(v) => {
                    self.trail_lim.push(self.trail.len());
                    self.enqueue(Lit::red(v), NO_REASON);
                }
            }
        }
    }
}

fn luby(i: u32) -> u32 {
    // i is 1-based
    let mut k = 1;
    while (1u32 << k) - 1 < i {
        k += 1;
    }
    if (1u32 << k) - 1 == i {
        1 << (k - 1)
    } else {
        luby(i - (1 << (k - 1)) + 1)
    }
}

struct Dfs<'a> {
    sys: &'a ConstraintSystem,
    occ: Vec<Vec<u32>>,
    value: Vec<u8>,
    trail: Vec<Lit>,
    qhead: usize,
}

impl<'a> Dfs<'a> {
    fn new(sys: &'a ConstraintSystem) -> Self {
        let mut occ = vec![Vec::new(); 2 * sys.var_count];
        for (i, c) in sys.clauses.iter().enumerate() {
            for l in c {
                occ[l.index()].push(i as u32);
            }
        }
        Dfs {
            sys,
            occ,
            value: vec![UNASSIGNED; sys.var_count],
            trail: Vec::new(),
            qhead: 0,
        }
    }

    fn assign(&mut self, l: Lit) -> bool {
        let v = self.value[l.var()];
        if v == UNASSIGNED {
            self.value[l.var()] = l.color() as u8;
            self.trail.push(l);
            true
        } else {
            v == l.color() as u8
        }
    }

    fn propagate(&mut self) -> bool {
        while self.qhead < self.trail.len() {
            let p = self.trail[self.qhead];
            self.qhead += 1;
            for &ci in &self.occ[p.negate().index()] {
                let c = &self.sys.clauses[ci as usize];
                let mut open = None;
                let mut open_count = 0;
                let mut sat = false;
                for &l in c {
                    let v = self.value[l.var()];
                    if v == UNASSIGNED {
                        open = Some(l);
                        open_count += 1;
                    } else if v == l.color() as u8 {
                        sat = true;
                        break;
                    }
                }
                if sat {
                    continue;
                }
                match open_count {
                    0 => return false,
                    1 => {
                        let l = open.unwrap();
                        self.value[l.var()] = l.color() as u8;
                        self.trail.push(l);
                    }
                    _ => {}
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        for l in self.trail.drain(mark..) {
            self.value[l.var()] = UNASSIGNED;
        }
        self.qhead = mark;
    }

    /// Returns Ok(true) when the solution limit is reached.
    fn run(
        &mut self,
        from: usize,
        limit: Option<usize>,
        budget: u64,
        out: &mut Enumeration,
    ) -> Result<bool, BudgetExceeded> {
        let Some(v) = (from..self.value.len()).find(|&v| self.value[v] == UNASSIGNED) else {
            out.solutions.push(
                self.value
                    .iter()
                    .map(|&c| if c == 0 { Color::Red } else { Color::Blue })
                    .collect(),
            );
            if limit.is_some_and(|l| out.solutions.len() >= l) {
                out.truncated = true;
                return Ok(true);
            }
            return Ok(false);
        };
        for color in [Color::Red, Color::Blue] {
            out.states += 1;
            if out.states > budget {
                return Err(BudgetExceeded { budget });
            }
            let mark = self.trail.len();
            self.assign(Lit::new(v, color));
            if self.propagate() && self.run(v + 1, limit, budget, out)? {
                return Ok(true);
            }
            self.undo(mark);
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn luby_sequence() {
        let seq: Vec<u32> = (1..=15).map(luby).collect();
        assert_eq!(seq, vec![1, 1, 2, 1, 1, 2, 4, 1, 1, 2, 1, 1, 2, 4, 8]);
    }

    #[test]
    fn pigeonhole_three_into_two_is_unsat() {
        // var 3*i + j: pigeon i sits in hole j (blue = yes)
        let mut s = ConstraintSystem::new(6);
        for i in 0..3 {
            s.add_clause(&[Lit::blue(2 * i), Lit::blue(2 * i + 1)]);
        }
        for j in 0..2 {
            for a in 0..3 {
                for b in a + 1..3 {
                    s.add_clause(&[Lit::red(2 * a + j), Lit::red(2 * b + j)]);
                }
            }
        }
        assert!(s.solve().is_none());
        assert!(s.enumerate(None, 1 << 20).unwrap().solutions.is_empty());
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let mut s = ConstraintSystem::new(4);
        s.add_clause(&[Lit::red(0), Lit::red(1), Lit::blue(3)]);
        s.add_clause(&[Lit::blue(1), Lit::blue(2)]);
        let e = s.enumerate(None, 1 << 20).unwrap();
        let brute: Vec<Vec<Color>> = (0..16u32)
            .map(|m| {
                (0..4)
                    .map(|i| if m >> (3 - i) & 1 == 0 { Color::Red } else { Color::Blue })
                    .collect::<Vec<_>>()
            })
            .filter(|c| s.satisfied_by(c))
            .collect();
        assert_eq!(e.solutions, brute);
        assert!(!e.truncated);
        let t = s.enumerate(Some(2), 1 << 20).unwrap();
        assert!(t.truncated);
        assert_eq!(t.solutions, brute[..2].to_vec());
        assert!(s.enumerate(None, 3).is_err());
    }

    #[test]
    fn assumptions_restrict_models() {
        let mut s = ConstraintSystem::new(3);
        s.add_clause(&[Lit::red(0), Lit::red(1), Lit::red(2)]);
        let m = s.solve_with(&[Lit::blue(0), Lit::blue(1)]).unwrap();
        assert_eq!(m, vec![Color::Blue, Color::Blue, Color::Red]);
        assert!(s.solve_with(&[Lit::blue(0), Lit::blue(1), Lit::blue(2)]).is_none());
        assert!(s.solve_with(&[Lit::blue(0), Lit::red(0)]).is_none());
    }

    #[test]
    fn random_3sat_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(3..11);
            let m = rng.gen_range(1..(5 * n));
            let mut s = ConstraintSystem::new(n);
            for _ in 0..m {
                let lits: Vec<Lit> = (0..3)
                    .map(|_| {
                        let c = if rng.gen_bool(0.5) { Color::Red } else { Color::Blue };
                        Lit::new(rng.gen_range(0..n), c)
                    })
                    .collect();
                s.add_clause(&lits);
            }
            let brute = (0..1u32 << n).any(|mask| {
                let c: Vec<Color> = (0..n)
                    .map(|i| if mask >> i & 1 == 0 { Color::Red } else { Color::Blue })
                    .collect();
                s.satisfied_by(&c)
            });
            let got = s.solve();
            assert_eq!(got.is_some(), brute);
            if let Some(m) = got {
                assert!(s.satisfied_by(&m));
            }
            let count = s.enumerate(None, u64::MAX).unwrap().solutions.len();
            let brute_count = (0..1u32 << n)
                .filter(|mask| {
                    let c: Vec<Color> = (0..n)
                        .map(|i| {
                            if mask >> (n - 1 - i) & 1 == 0 {
                                Color::Red
                            } else {
                                Color::Blue
                            }
                        })
                        .collect();
                    s.satisfied_by(&c)
                })
                .count();
            assert_eq!(count, brute_count);
        }
    }
}
