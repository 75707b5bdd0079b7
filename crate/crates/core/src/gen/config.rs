use crate::error::{Error, Result};
use crate::sgcore::{Sign, SignedGraph};

/// A reducible configuration: a pattern graph whose black vertices have
/// their whole neighbourhood inside the pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigPattern {
    pub name: char,
    pub graph: SignedGraph,
    pub black: Vec<bool>,
}

impl ConfigPattern {
    /// Pattern `'a'`..`'d'` of the cubic reduction. Vertex `vi` has id `i - 1`.
    pub fn cubic(name: char) -> Result<Self> {
        let (order, black, edges): (usize, &[usize], &[(usize, usize)]) = match name {
            'a' => (6, &[3, 4, 5, 6], &[(1, 3), (3, 5), (3, 6), (5, 6), (5, 4), (6, 4), (4, 2)]),
            'b' => (6, &[4, 5, 6], &[(4, 5), (5, 6), (4, 6), (1, 4), (2, 5), (3, 6)]),
            'c' => (8, &[5, 6, 7, 8], &[(5, 6), (6, 7), (7, 8), (8, 5), (1, 5), (2, 6), (3, 7), (4, 8)]),
            'd' => (
                14,
                &[9, 10, 11, 12, 13, 14],
                &[
                    (9, 1),
                    (9, 2),
                    (9, 14),
                    (12, 8),
                    (12, 7),
                    (12, 14),
                    (14, 13),
                    (10, 3),
                    (10, 4),
                    (10, 13),
                    (11, 6),
                    (11, 5),
                    (11, 13),
                ],
            ),
            _ => return Err(Error::UnknownName(format!("configuration {name}"))),
        };
        let e: Vec<_> = edges.iter().map(|&(u, v)| (u - 1, v - 1, Sign::Positive)).collect();
        let graph = SignedGraph::new(order, &e)?.with_labels((1..=order).map(|i| format!("v{i}")).collect())?;
        let black = (1..=order).map(|i| black.contains(&i)).collect();
        Ok(ConfigPattern { name, graph, black })
    }

    pub fn all_cubic() -> Vec<Self> {
        "abcd".chars().map(|c| Self::cubic(c).unwrap()).collect()
    }
}

struct Matcher<'a> {
    p: &'a ConfigPattern,
    g: &'a SignedGraph,
    order: Vec<usize>,
}

impl Matcher<'_> {
    fn rec(&self, i: usize, image: &mut Vec<usize>) -> bool {
        if i == self.order.len() {
            return self.black_closed(image);
        }
        let pv = self.order[i];
        let assigned: Vec<usize> = self.order[..i].to_vec();
        let cands: Vec<usize> = match assigned.iter().find(|&&q| self.p.graph.is_adjacent(pv, q)) {
            Some(&q) => self.g.neighbor_bits(image[q]).iter().collect(),
            None => (0..self.g.order()).collect(),
        };
        'cand: for x in cands {
            for &q in &assigned {
                let same = image[q] == x;
                if same && (self.p.black[pv] || self.p.black[q]) {
                    continue 'cand;
                }
                if self.p.graph.is_adjacent(pv, q) && !self.g.is_adjacent(image[q], x) {
                    continue 'cand;
                }
            }
            image[pv] = x;
            if self.rec(i + 1, image) {
                return true;
            }
        }
        image[self.order[i]] = usize::MAX;
        false
    }

    fn black_closed(&self, image: &[usize]) -> bool {
        (0..self.p.graph.order()).filter(|&b| self.p.black[b]).all(|b| {
            let mut want: Vec<usize> = self.p.graph.neighbor_bits(b).iter().map(|w| image[w]).collect();
            want.sort_unstable();
            want.dedup();
            let have: Vec<usize> = self.g.neighbor_bits(image[b]).iter().collect();
            want == have
        })
    }
}

/// Finds an occurrence of `p` in the underlying graph of `g`: images of black
/// vertices are distinct and their neighbourhoods in `g` are exactly the images
/// of their pattern neighbours; white vertices may coincide with each other.
///
/// Returns the image of each pattern vertex.
pub fn find_configuration(g: &SignedGraph, p: &ConfigPattern) -> Option<Vec<usize>> {
    let n = p.graph.order();
    // black vertices first, in BFS order so each new vertex has an assigned neighbour
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let start = (0..n).find(|&v| p.black[v])?;
    order.push(start);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        let mut next: Vec<usize> = p.graph.neighbor_bits(u).iter().filter(|w| !order.contains(w)).collect();
        next.sort_by_key(|&w| !p.black[w]);
        order.extend(next);
    }
    order.extend((0..n).filter(|v| !order.contains(v)).collect::<Vec<_>>());
    let m = Matcher { p, g, order };
    let mut image = vec![usize::MAX; n];
    m.rec(0, &mut image).then_some(image)
}
