//! Turning a token-to-target assignment into a collision-free sliding
//! schedule.
//!
//! Take an unsettled token and a shortest path to its target. If the target
//! is occupied, the two tokens swap targets (no move, summed distance does
//! not grow by the triangle inequality). Otherwise the last token on the
//! path walks the free remainder to the target and settles there, and the
//! first token takes over that token's old target, which is at most the
//! same distance away. Each round settles a token or strictly lowers the
//! summed distance, and the moves made never exceed the drop, so the
//! schedule length is at most the assignment cost.

use std::collections::VecDeque;

use crate::engines::min_cost_assignment;
use crate::error::Result;
use crate::graph::{ElementKind, Graph};
use crate::instance::{Move, Schedule};
use crate::oracle::distance_matrix;

struct Slider<'a> {
    g: &'a Graph,
    kind: ElementKind,
    nbrs: Vec<Vec<usize>>,
}

impl<'a> Slider<'a> {
    fn new(g: &'a Graph, kind: ElementKind) -> Self {
        let nbrs = (0..g.element_count(kind)).map(|x| g.element_neighbors(kind, x)).collect();
        Slider { g, kind, nbrs }
    }

    /// Shortest element path from `a` to `b`, both ends included.
    fn path(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        let n = self.g.element_count(self.kind);
        let mut prev = vec![usize::MAX; n];
        prev[b] = b;
        let mut queue = VecDeque::from([b]);
        while let Some(x) = queue.pop_front() {
            if x == a {
                break;
            }
            for &y in &self.nbrs[x] {
                if prev[y] == usize::MAX {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[a] == usize::MAX {
            return None;
        }
        let mut out = vec![a];
        let mut x = a;
        while x != b {
            x = prev[x];
            out.push(x);
        }
        Some(out)
    }
}

/// Sliding schedule moving token `from[i]` towards `to[i]` for all i. The
/// final configuration is exactly the target set. `None` if some pair is
/// disconnected.
pub fn realize_assignment(g: &Graph, kind: ElementKind, from: &[usize], to: &[usize]) -> Option<Schedule> {
    assert_eq!(from.len(), to.len());
    let sl = Slider::new(g, kind);
    let n = g.element_count(kind);
    let mut cur = from.to_vec();
    let mut tgt = to.to_vec();
    let mut at = vec![usize::MAX; n];
    for (i, &x) in cur.iter().enumerate() {
        at[x] = i;
    }
    let mut moves = Vec::new();
    loop {
        let Some(i) = (0..cur.len()).find(|&i| cur[i] != tgt[i]) else { break };
        let path = sl.path(cur[i], tgt[i])?;
        let last = path.len() - 1;
        let j = (0..=last).rev().find(|&j| at[path[j]] != usize::MAX).unwrap();
        let mover = at[path[j]];
        if j == last {
            // target occupied: swap targets
            tgt.swap(i, mover);
            continue;
        }
        for w in path[j..].windows(2) {
            moves.push(Move::Shift { from: w[0], to: w[1] });
        }
        at[path[j]] = usize::MAX;
        at[path[last]] = mover;
        cur[mover] = path[last];
        if mover != i {
            tgt[i] = tgt[mover];
        }
        tgt[mover] = path[last];
    }
    Some(Schedule::new(moves))
}

/// Cheapest bijection from `start` onto `target` and its realized sliding
/// schedule. `None` when no bijection with finite distances exists.
pub fn assignment_schedule(
    g: &Graph,
    kind: ElementKind,
    start: &[usize],
    target: &[usize],
) -> Result<Option<(usize, Schedule)>> {
    let d = distance_matrix(g, kind, start, target)?;
    let cost: Vec<Vec<Option<u64>>> = d.iter().map(|r| r.iter().map(|x| x.map(|v| v as u64)).collect()).collect();
    let Some((total, assign)) = min_cost_assignment(&cost) else { return Ok(None) };
    let to: Vec<usize> = assign.iter().map(|&c| target[c]).collect();
    let sch = realize_assignment(g, kind, start, &to).expect("finite distances imply paths");
    debug_assert!(sch.len() <= total as usize);
    Ok(Some((total as usize, sch)))
}

/// Jumping schedule from `start` to `target`: tokens off the target jump onto
/// uncovered target elements.
pub fn jump_schedule(start: &[usize], target: &[usize]) -> Schedule {
    let from: Vec<usize> = start.iter().copied().filter(|x| !target.contains(x)).collect();
    let to: Vec<usize> = target.iter().copied().filter(|x| !start.contains(x)).collect();
    assert_eq!(from.len(), to.len(), "jumping keeps the token count");
    Schedule::jumps(&from, &to)
}

/// Removals of `start \ target` then additions of `target \ start`.
pub fn add_remove_schedule(start: &[usize], target: &[usize]) -> Schedule {
    let rem: Vec<usize> = start.iter().copied().filter(|x| !target.contains(x)).collect();
    let add: Vec<usize> = target.iter().copied().filter(|x| !start.contains(x)).collect();
    Schedule::removals_then_additions(&rem, &add)
}
