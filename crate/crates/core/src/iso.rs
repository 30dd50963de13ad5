//! Labeled graph isomorphism for small diagrams.
//!
//! Diagrams compared here have at most a couple dozen vertices, so a
//! backtracking matcher with degree/label-multiset pruning is plenty.

use crate::diagram::{Diagram, EdgeLabel};

/// Multiset of incident edge labels, sorted; used as an invariant signature.
fn signature(d: &Diagram, v: usize) -> Vec<EdgeLabel> {
    let mut sig: Vec<EdgeLabel> = d
        .neighbors(v)
        .iter()
        .map(|&u| d.label_between(v, u))
        .collect();
    sig.sort_unstable();
    sig
}

/// Finds a label-preserving vertex bijection from `a` to `b`, if one exists.
///
/// The returned vector maps vertex `i` of `a` to `map[i]` of `b`.
pub fn find_isomorphism(a: &Diagram, b: &Diagram) -> Option<Vec<usize>> {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }

    let sig_a: Vec<Vec<EdgeLabel>> = (0..n).map(|v| signature(a, v)).collect();
    let sig_b: Vec<Vec<EdgeLabel>> = (0..n).map(|v| signature(b, v)).collect();
    {
        let mut sa = sig_a.clone();
        let mut sb = sig_b.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return None;
        }
    }

    // Match rare signatures first to cut the branching factor.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| {
        let count = sig_a.iter().filter(|s| **s == sig_a[v]).count();
        (count, std::cmp::Reverse(sig_a[v].len()))
    });

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    #[allow(clippy::too_many_arguments)]
    fn backtrack(
        a: &Diagram,
        b: &Diagram,
        order: &[usize],
        sig_a: &[Vec<EdgeLabel>],
        sig_b: &[Vec<EdgeLabel>],
        depth: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        'cand: for w in 0..b.vertex_count() {
            if used[w] || sig_a[v] != sig_b[w] {
                continue;
            }
            for &prev in &order[..depth] {
                if a.label_between(v, prev) != b.label_between(w, map[prev]) {
                    continue 'cand;
                }
            }
            map[v] = w;
            used[w] = true;
            if backtrack(a, b, order, sig_a, sig_b, depth + 1, map, used) {
                return true;
            }
            map[v] = usize::MAX;
            used[w] = false;
        }
        false
    }

    if backtrack(a, b, &order, &sig_a, &sig_b, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

pub fn are_isomorphic(a: &Diagram, b: &Diagram) -> bool {
    find_isomorphism(a, b).is_some()
}

/// Checks that an explicit name mapping is a label-preserving isomorphism.
pub fn is_label_preserving(a: &Diagram, b: &Diagram, pairs: &[(usize, usize)]) -> bool {
    if pairs.len() != a.vertex_count() || pairs.len() != b.vertex_count() {
        return false;
    }
    let mut seen_a = vec![false; a.vertex_count()];
    let mut seen_b = vec![false; b.vertex_count()];
    for &(x, y) in pairs {
        if x >= a.vertex_count() || y >= b.vertex_count() || seen_a[x] || seen_b[y] {
            return false;
        }
        seen_a[x] = true;
        seen_b[y] = true;
    }
    for (k, &(x1, y1)) in pairs.iter().enumerate() {
        for &(x2, y2) in &pairs[k + 1..] {
            if a.label_between(x1, x2) != b.label_between(y1, y2) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::CoxeterMatrix;

    fn diagram(names: &[&str], edges: &[(&str, &str, EdgeLabel)]) -> Diagram {
        let mut m = CoxeterMatrix::new(names.to_vec()).unwrap();
        for &(u, v, l) in edges {
            m.set_label_by_name(u, v, l).unwrap();
        }
        m.to_diagram()
    }

    #[test]
    fn path_relabelings_are_isomorphic() {
        let inf = EdgeLabel::Infinite;
        let a = diagram(
            &["a", "b", "c"],
            &[("a", "b", EdgeLabel::Finite(3)), ("b", "c", inf)],
        );
        let b = diagram(
            &["x", "y", "z"],
            &[("z", "y", EdgeLabel::Finite(3)), ("y", "x", inf)],
        );
        let map = find_isomorphism(&a, &b).unwrap();
        assert!(is_label_preserving(
            &a,
            &b,
            &map.iter().copied().enumerate().collect::<Vec<_>>()
        ));
    }

    #[test]
    fn labels_matter() {
        let a = diagram(&["a", "b"], &[("a", "b", EdgeLabel::Finite(3))]);
        let b = diagram(&["a", "b"], &[("a", "b", EdgeLabel::Finite(4))]);
        assert!(!are_isomorphic(&a, &b));
    }

    #[test]
    fn star_vs_path() {
        let t = EdgeLabel::Finite(3);
        let star = diagram(
            &["c", "l1", "l2", "l3"],
            &[("c", "l1", t), ("c", "l2", t), ("c", "l3", t)],
        );
        let path = diagram(
            &["a", "b", "c", "d"],
            &[("a", "b", t), ("b", "c", t), ("c", "d", t)],
        );
        assert!(!are_isomorphic(&star, &path));
        assert!(are_isomorphic(&star, &star));
    }
}
