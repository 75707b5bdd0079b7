use super::field::make_field;
use crate::error::{Error, Result};
use crate::sgcore::{Sign, SignedGraph};

/// The signed Paley graph SP_q: complete on GF(q), `uv` positive iff `u - v`
/// is a nonzero square. Vertices are labelled by their field element index.
pub fn paley(q: usize) -> Result<SignedGraph> {
    let f = make_field(q)?;
    if q % 4 != 1 {
        return Err(Error::NotOneModFour(q));
    }
    let mut g = SignedGraph::empty(q);
    for u in 0..q {
        for v in u + 1..q {
            let s = if f.is_square(f.sub(u, v)) { Sign::Positive } else { Sign::Negative };
            g.set(u, v, Some(s));
        }
    }
    g.set_labels_unchecked(Some((0..q).map(|v| v.to_string()).collect()));
    Ok(g)
}

/// SP_q⁺: SP_q plus a vertex `inf` (id `q`) joined positively to every vertex.
pub fn paley_plus(q: usize) -> Result<SignedGraph> {
    let base = paley(q)?;
    let mut g = SignedGraph::empty(q + 1);
    for (u, v, s) in base.edges() {
        g.set(u, v, Some(s));
    }
    for v in 0..q {
        g.set(v, q, Some(Sign::Positive));
    }
    let mut labels: Vec<String> = (0..q).map(|v| v.to_string()).collect();
    labels.push("inf".into());
    g.set_labels_unchecked(Some(labels));
    Ok(g)
}
