//! Rings of rules: sequences r₁ … rₖ of distinct rules in which some tail
//! state of each rule appears in the head of the next, and a tail state of
//! rₖ appears in the head of r₁.

use super::DagAutomaton;

/// All rings of `a`, each as rule indices starting from its smallest index.
/// Rings of length one are rules whose tail shares a state with their own
/// head. Sorted by length, then lexicographically.
pub fn rule_cycles(a: &DagAutomaton) -> Vec<Vec<usize>> {
    let rules = a.rules();
    let n = rules.len();
    let succ: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| rules[i].tail.iter().any(|q| rules[j].head.contains(q)))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut path = Vec::new();
    let mut on_path = vec![false; n];
    for start in 0..n {
        path.push(start);
        on_path[start] = true;
        extend(start, &succ, &mut path, &mut on_path, &mut out);
        on_path[start] = false;
        path.pop();
    }
    out.sort_by(|x: &Vec<usize>, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    out
}

fn extend(
    start: usize,
    succ: &[Vec<usize>],
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().expect("path starts at `start`");
    for &next in &succ[last] {
        if next == start {
            out.push(path.clone());
        } else if next > start && !on_path[next] {
            path.push(next);
            on_path[next] = true;
            extend(start, succ, path, on_path, out);
            on_path[next] = false;
            path.pop();
        }
    }
}
