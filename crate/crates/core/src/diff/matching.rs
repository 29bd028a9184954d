use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::{EditOp, EditScript, LoadNode, RemovedNode};
use crate::syntax::{NodeData, NodeId, SyntaxTree, ERROR};

/// Hash over kind, flags, leaf text and child hashes, for every node.
fn subtree_hashes(tree: &SyntaxTree) -> Vec<u64> {
    let data = tree.data();
    let text = tree.text();
    let mut hashes = vec![0u64; data.len()];
    for i in (0..data.len()).rev() {
        let n = &data[i];
        let mut h = DefaultHasher::new();
        n.kind.hash(&mut h);
        (n.named, n.error, n.missing).hash(&mut h);
        if n.children.is_empty() {
            text[n.span.start..n.span.end].hash(&mut h);
        } else {
            for &c in &n.children {
                hashes[c as usize].hash(&mut h);
            }
        }
        hashes[i] = h.finish();
    }
    hashes
}

fn subtree_sizes(data: &[NodeData]) -> Vec<u32> {
    let mut sizes = vec![1u32; data.len()];
    for i in (0..data.len()).rev() {
        if let Some(p) = data[i].parent {
            sizes[p as usize] += sizes[i];
        }
    }
    sizes
}

/// Candidate closest to `target` by preorder index; ties go left.
fn nearest(set: &BTreeSet<u32>, target: u32) -> Option<u32> {
    let below = set.range(..=target).next_back().copied();
    let above = set.range(target..).next().copied();
    match (below, above) {
        (Some(b), Some(a)) => Some(if target - b <= a - target { b } else { a }),
        (b, a) => b.or(a),
    }
}

/// Positions (into `seq`) of one longest strictly increasing subsequence.
fn lis(seq: &[usize]) -> Vec<usize> {
    let mut tails: Vec<usize> = Vec::new();
    let mut prev = vec![usize::MAX; seq.len()];
    for (i, &v) in seq.iter().enumerate() {
        let pos = tails.partition_point(|&t| seq[t] < v);
        if pos > 0 {
            prev[i] = tails[pos - 1];
        }
        if pos == tails.len() {
            tails.push(i);
        } else {
            tails[pos] = i;
        }
    }
    let mut out = Vec::with_capacity(tails.len());
    let mut cur = tails.last().copied();
    while let Some(i) = cur {
        out.push(i);
        cur = (prev[i] != usize::MAX).then_some(prev[i]);
    }
    out.reverse();
    out
}

/// The new text parsed to nothing but a single error node.
fn is_degenerate(tree: &SyntaxTree) -> bool {
    let root = tree.root();
    let mut kids = root.syntax_children();
    match (kids.next(), kids.next()) {
        (Some(only), None) => {
            let content = tree.text().trim();
            only.kind() == ERROR && only.text().trim() == content && !content.is_empty()
        }
        _ => false,
    }
}

struct Matching {
    old_to_new: Vec<Option<u32>>,
    new_to_old: Vec<Option<u32>>,
}

impl Matching {
    fn pair(&mut self, o: u32, n: u32) {
        self.old_to_new[o as usize] = Some(n);
        self.new_to_old[n as usize] = Some(o);
    }
}

fn match_trees(old: &SyntaxTree, new: &SyntaxTree) -> Matching {
    let (od, nd) = (old.data(), new.data());
    let mut m = Matching {
        old_to_new: vec![None; od.len()],
        new_to_old: vec![None; nd.len()],
    };
    let oh = subtree_hashes(old);
    let nh = subtree_hashes(new);
    let osize = subtree_sizes(od);
    let nsize = subtree_sizes(nd);

    if oh[0] == nh[0] && old.root().structurally_eq(&new.root()) {
        for i in 0..od.len() as u32 {
            m.pair(i, i);
        }
        return m;
    }
    m.pair(0, 0);

    // Pass 1: identical subtrees, largest first.
    let mut buckets: HashMap<u64, BTreeSet<u32>> = HashMap::new();
    for i in 1..od.len() as u32 {
        buckets.entry(oh[i as usize]).or_default().insert(i);
    }
    let mut order: Vec<u32> = (1..nd.len() as u32).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(nsize[i as usize]), i));
    for n in order {
        if m.new_to_old[n as usize].is_some() {
            continue;
        }
        let Some(cands) = buckets.get(&nh[n as usize]) else {
            continue;
        };
        let Some(o) = nearest(cands, n) else {
            continue;
        };
        if !old.at(o).structurally_eq(&new.at(n)) {
            continue;
        }
        for k in 0..osize[o as usize] {
            let (oi, ni) = (o + k, n + k);
            m.pair(oi, ni);
            if let Some(set) = buckets.get_mut(&oh[oi as usize]) {
                set.remove(&oi);
            }
        }
    }

    // Pass 2: same kind among the leftovers, nearest preorder index.
    type Key = (Arc<str>, bool, bool, bool);
    let key = |n: &NodeData| -> Key { (n.kind.clone(), n.named, n.children.is_empty(), n.missing) };
    let mut by_kind: BTreeMap<Key, BTreeSet<u32>> = BTreeMap::new();
    for (i, n) in od.iter().enumerate() {
        if m.old_to_new[i].is_none() {
            by_kind.entry(key(n)).or_default().insert(i as u32);
        }
    }
    for (i, n) in nd.iter().enumerate() {
        if m.new_to_old[i].is_some() {
            continue;
        }
        let Some(set) = by_kind.get_mut(&key(n)) else {
            continue;
        };
        if let Some(o) = nearest(set, i as u32) {
            set.remove(&o);
            m.pair(o, i as u32);
        }
    }
    m
}

fn blueprint(tree: &SyntaxTree, idx: u32, id: NodeId) -> LoadNode {
    let n = tree.at(idx);
    LoadNode {
        id,
        kind: n.kind().to_string(),
        named: n.is_named(),
        error: n.is_error(),
        missing: n.is_missing(),
        text: if n.is_leaf() { n.text().to_string() } else { String::new() },
    }
}

/// Edit script turning `old` into `new`. `new` is a fresh parse; its ids
/// are ignored, reused nodes keep their old ids and the rest get ids from
/// `old.next_id()` onwards in preorder.
pub fn diff_trees(old: &SyntaxTree, new: &SyntaxTree) -> EditScript {
    let m = match_trees(old, new);
    let (od, nd) = (old.data(), new.data());

    let mut next = old.next_id();
    let new_ids: Vec<NodeId> = (0..nd.len())
        .map(|i| match m.new_to_old[i] {
            Some(o) => od[o as usize].id,
            None => {
                next += 1;
                next - 1
            }
        })
        .collect();

    // Children that stay attached where they are.
    let mut kept_old = vec![false; od.len()];
    let mut kept_new = vec![false; nd.len()];
    kept_old[0] = true;
    kept_new[0] = true;
    for (p, pdata) in nd.iter().enumerate() {
        let Some(op) = m.new_to_old[p] else { continue };
        let mut cands = Vec::new();
        let mut positions = Vec::new();
        for &c in &pdata.children {
            if let Some(oc) = m.new_to_old[c as usize] {
                if od[oc as usize].parent == Some(op) {
                    let pos = od[op as usize].children.iter().position(|&x| x == oc).unwrap();
                    cands.push((c, oc));
                    positions.push(pos);
                }
            }
        }
        for i in lis(&positions) {
            let (c, oc) = cands[i];
            kept_new[c as usize] = true;
            kept_old[oc as usize] = true;
        }
    }

    let mut ops = Vec::new();
    let mut removes = Vec::new();
    for o in (1..od.len()).rev() {
        let parent = od[o].parent.expect("non-root has parent") as usize;
        let matched = m.old_to_new[o].is_some();
        if matched && kept_old[o] {
            continue;
        }
        if !matched && m.old_to_new[parent].is_none() {
            continue;
        }
        let index = od[parent].children.iter().position(|&x| x as usize == o).unwrap();
        ops.push(EditOp::Detach {
            node: od[o].id,
            parent: od[parent].id,
            index,
        });
        if !matched {
            removes.push(EditOp::Remove {
                node: od[o].id,
                subtree: removed_subtree(old, &m, o as u32),
            });
        }
    }
    for (i, &id) in new_ids.iter().enumerate() {
        if m.new_to_old[i].is_none() {
            ops.push(EditOp::Load {
                node: blueprint(new, i as u32, id),
            });
        }
    }
    for (p, pdata) in nd.iter().enumerate() {
        for (index, &c) in pdata.children.iter().enumerate() {
            if !kept_new[c as usize] {
                ops.push(EditOp::Attach {
                    node: new_ids[c as usize],
                    parent: new_ids[p],
                    index,
                });
            }
        }
    }
    for (n, ndata) in nd.iter().enumerate() {
        if let Some(o) = m.new_to_old[n] {
            if ndata.children.is_empty() {
                let (a, b) = (old.at(o).text(), new.at(n as u32).text());
                if a != b {
                    ops.push(EditOp::Update {
                        node: new_ids[n],
                        old: a.to_string(),
                        new: b.to_string(),
                    });
                }
            }
        }
    }
    removes.reverse();
    ops.extend(removes);

    let changed = !ops.is_empty();
    EditScript {
        ops,
        source_version: old.version(),
        target_version: old.version() + changed as u64,
        source_next_id: old.next_id(),
        target_next_id: next,
        degenerate: is_degenerate(new),
    }
}

/// Preorder snapshot of the unmatched part of the subtree at `root`.
fn removed_subtree(old: &SyntaxTree, m: &Matching, root: u32) -> Vec<RemovedNode> {
    let od = old.data();
    let mut out = Vec::new();
    let mut stack = vec![root];
    while let Some(i) = stack.pop() {
        let kids: Vec<u32> = od[i as usize]
            .children
            .iter()
            .copied()
            .filter(|&c| m.old_to_new[c as usize].is_none())
            .collect();
        out.push(RemovedNode {
            node: blueprint(old, i, od[i as usize].id),
            children: kids.iter().map(|&c| od[c as usize].id).collect(),
        });
        stack.extend(kids.iter().rev());
    }
    out
}
