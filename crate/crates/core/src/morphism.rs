//! Backtracking search for structure-preserving bijections between two
//! tables, shared by automorphism enumeration and isomorphism testing.

use crate::perm::Permutation;
use crate::table::CayleyTable;

#[derive(Clone, Copy)]
pub(crate) struct Shape<'a> {
    pub table: &'a CayleyTable,
    pub alpha: &'a Permutation,
    pub alpha_inv: &'a Permutation,
    pub unit: usize,
}

/// Per-element invariants that any isomorphism must preserve.
fn signature(s: &Shape<'_>, x: usize) -> (usize, bool, bool) {
    let t = s.table;
    let self_inverse = t.get(x, x) == s.unit;
    let idempotent = t.get(x, x) == x;
    (s.alpha.cycle_len(x), self_inverse, idempotent)
}

struct Search<'a> {
    src: Shape<'a>,
    dst: Shape<'a>,
    n: usize,
    allowed: Vec<Vec<usize>>,
    first_only: bool,
    found: Vec<Permutation>,
}

#[derive(Clone)]
struct Partial {
    map: Vec<usize>,
    used: Vec<bool>,
    assigned: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl Search<'_> {
    /// Assigns `x ↦ y` and every image it forces. Returns false on conflict.
    fn assign(&self, state: &mut Partial, x: usize, y: usize) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            if state.map[x] != NONE {
                if state.map[x] != y {
                    return false;
                }
                continue;
            }
            if state.used[y] || !self.allowed[x].contains(&y) {
                return false;
            }
            state.map[x] = y;
            state.used[y] = true;
            state.assigned.push(x);

            queue.push((self.src.alpha.apply(x), self.dst.alpha.apply(y)));
            queue.push((self.src.alpha_inv.apply(x), self.dst.alpha_inv.apply(y)));
            for &z in &state.assigned {
                let fz = state.map[z];
                queue.push((self.src.table.get(x, z), self.dst.table.get(y, fz)));
                queue.push((self.src.table.get(z, x), self.dst.table.get(fz, y)));
            }
        }
        true
    }

    fn run(&mut self, state: Partial) {
        if self.first_only && !self.found.is_empty() {
            return;
        }
        let Some(x) = (0..self.n).find(|&i| state.map[i] == NONE) else {
            self.found
                .push(Permutation::new(state.map).expect("search yields bijections"));
            return;
        };
        for y in self.allowed[x].clone() {
            if state.used[y] {
                continue;
            }
            let mut next = state.clone();
            if self.assign(&mut next, x, y) {
                self.run(next);
            }
        }
    }
}

/// All bijections `f: src → dst` with `f(unit) = unit'`, `f∘α = α'∘f` and
/// `f(gk) = f(g)f(k)`, sorted by image sequence. With `first_only` the
/// search stops at the first witness.
pub(crate) fn isomorphisms(src: Shape<'_>, dst: Shape<'_>, first_only: bool) -> Vec<Permutation> {
    let n = src.table.order();
    if dst.table.order() != n || src.alpha.cycle_type() != dst.alpha.cycle_type() {
        return Vec::new();
    }
    let dst_sigs: Vec<_> = (0..n).map(|y| signature(&dst, y)).collect();
    let allowed: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            let sig = signature(&src, x);
            (0..n).filter(|&y| dst_sigs[y] == sig).collect()
        })
        .collect();
    let mut search = Search {
        src,
        dst,
        n,
        allowed,
        first_only,
        found: Vec::new(),
    };
    let mut state = Partial {
        map: vec![NONE; n],
        used: vec![false; n],
        assigned: Vec::with_capacity(n),
    };
    if search.assign(&mut state, src.unit, dst.unit) {
        search.run(state);
    }
    search.found.sort();
    search.found
}
