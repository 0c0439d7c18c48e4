use std::cmp::Ordering;

use crate::Monomial;

/// A global monomial order: total, multiplicative, with the unit
/// monomial as minimum. `WeightedGrevLex` is graded reverse
/// lexicographic with respect to the ring's weight vector and is the
/// crate default. `Block` compares a leading block of variables first
/// and is used for elimination.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    WeightedGrevLex,
    Block {
        head: usize,
        inner: Box<MonomialOrder>,
        tail: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    /// Elimination order for the first `head` variables.
    pub fn elimination(head: usize) -> MonomialOrder {
        MonomialOrder::Block {
            head,
            inner: Box::new(MonomialOrder::GrevLex),
            tail: Box::new(MonomialOrder::WeightedGrevLex),
        }
    }

    pub fn cmp_exps(&self, weights: &[u32], a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => {
                for (x, y) in a.iter().zip(b) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::GrevLex => {
                let da: u64 = a.iter().map(|&e| e as u64).sum();
                let db: u64 = b.iter().map(|&e| e as u64).sum();
                match da.cmp(&db) {
                    Ordering::Equal => grevlex_tie(a, b),
                    ord => ord,
                }
            }
            MonomialOrder::WeightedGrevLex => {
                let da: u64 = a.iter().zip(weights).map(|(&e, &w)| e as u64 * w as u64).sum();
                let db: u64 = b.iter().zip(weights).map(|(&e, &w)| e as u64 * w as u64).sum();
                match da.cmp(&db) {
                    Ordering::Equal => grevlex_tie(a, b),
                    ord => ord,
                }
            }
            MonomialOrder::Block { head, inner, tail } => {
                let h = (*head).min(a.len());
                match inner.cmp_exps(&weights[..h], &a[..h], &b[..h]) {
                    Ordering::Equal => tail.cmp_exps(&weights[h..], &a[h..], &b[h..]),
                    ord => ord,
                }
            }
        }
    }

    pub fn cmp(&self, weights: &[u32], a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exps(weights, a.exponents(), b.exponents())
    }
}

/// Reverse-lex tie break at equal degree: the monomial with the
/// smaller exponent in the last position where they differ is larger.
fn grevlex_tie(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn lex_compares_first_variable_first() {
        let w = [1, 1];
        // x^1 y^0 vs x^0 y^5
        assert_eq!(
            MonomialOrder::Lex.cmp(&w, &m(&[1, 0]), &m(&[0, 5])),
            Ordering::Greater
        );
    }

    #[test]
    fn grevlex_degree_tie() {
        let w = [1, 1];
        // x^2 vs x y: equal degree 2, last differing exponent is y
        // where x^2 has 0 < 1, so x^2 > xy.
        assert_eq!(
            MonomialOrder::GrevLex.cmp(&w, &m(&[2, 0]), &m(&[1, 1])),
            Ordering::Greater
        );
    }

    #[test]
    fn reflexive_eq() {
        let w = [1, 2, 3];
        let a = m(&[1, 2, 1]);
        for order in [
            MonomialOrder::Lex,
            MonomialOrder::GrevLex,
            MonomialOrder::WeightedGrevLex,
            MonomialOrder::elimination(1),
        ] {
            assert_eq!(order.cmp(&w, &a, &a), Ordering::Equal);
        }
    }

    #[test]
    fn weighted_degree_dominates() {
        let w = [1, 3];
        // y has weighted degree 3 > deg x^2 = 2
        assert_eq!(
            MonomialOrder::WeightedGrevLex.cmp(&w, &m(&[0, 1]), &m(&[2, 0])),
            Ordering::Greater
        );
    }

    #[test]
    fn block_order_eliminates_head() {
        let w = [1, 1, 1];
        let ord = MonomialOrder::elimination(1);
        // any positive power of the head variable beats anything in the tail
        assert_eq!(ord.cmp(&w, &m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
    }
}
