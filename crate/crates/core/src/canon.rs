//! Center-rooted AHU canonical codes for free trees.
//!
//! A rooted subtree is encoded as the bit string `1 c_1 c_2 ... c_m 0` where
//! the child codes `c_i` are sorted. A free tree is rooted at its center; a
//! bicentral tree takes the smaller of its two center-rooted codes. The final
//! byte string is the vertex count (big-endian `u16`) followed by the packed
//! bits, so two trees share a code exactly when they are isomorphic.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::tree::Tree;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_hex())
    }
}

/// One or two central vertices, found by repeatedly stripping leaves.
pub fn centers(t: &Tree) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree = t.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in t.neighbors(leaf) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_bits(t: &Tree, root: usize) -> Vec<bool> {
    // iterative post-order to avoid recursion depth concerns on long paths
    let n = t.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &w in t.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    let mut codes: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &u in order.iter().rev() {
        let mut kids: Vec<Vec<bool>> = children[u].iter().map(|&c| std::mem::take(&mut codes[c])).collect();
        kids.sort_unstable();
        let mut code = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        code.push(true);
        for k in kids {
            code.extend(k);
        }
        code.push(false);
        codes[u] = code;
        if u != root {
            children[parent[u]].push(u);
        }
    }
    std::mem::take(&mut codes[root])
}

pub fn canonical_code(t: &Tree) -> CanonicalCode {
    let bits = centers(t)
        .into_iter()
        .map(|c| rooted_bits(t, c))
        .min()
        .expect("a tree has at least one center");
    let n = u16::try_from(t.n()).expect("tree too large for canonical code");
    let mut bytes = n.to_be_bytes().to_vec();
    for chunk in bits.chunks(8) {
        let mut byte = 0u8;
        for (i, &bit) in chunk.iter().enumerate() {
            if bit {
                byte |= 0x80 >> i;
            }
        }
        bytes.push(byte);
    }
    CanonicalCode(bytes)
}
