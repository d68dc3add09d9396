use std::cmp::Ordering;

/// A word over generator indices, ordered deglex: length first, then
/// lexicographically from the left.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<usize>);

impl Ord for Word {
    fn cmp(&self, other: &Word) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn letter(i: usize) -> Word {
        Word(vec![i])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// u·self·v
    pub fn wrap(&self, u: &Word, v: &Word) -> Word {
        u.concat(self).concat(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    /// Start positions of `sub` inside `self`, left to right.
    pub fn positions(&self, sub: &Word) -> Vec<usize> {
        if sub.len() > self.len() {
            return Vec::new();
        }
        (0..=self.len() - sub.len())
            .filter(|&i| self.0[i..i + sub.len()] == sub.0[..])
            .collect()
    }

    pub fn find(&self, sub: &Word) -> Option<usize> {
        if sub.len() > self.len() {
            return None;
        }
        (0..=self.len() - sub.len()).find(|&i| self.0[i..i + sub.len()] == sub.0[..])
    }

    pub fn ends_with(&self, sub: &Word) -> bool {
        self.0.ends_with(&sub.0)
    }

    /// Position of the word in the basis of U^{⊗n}, first letter outermost.
    pub fn index(&self, n_gens: usize) -> usize {
        self.0.iter().fold(0, |acc, &l| acc * n_gens + l)
    }

    pub fn from_index(mut idx: usize, len: usize, n_gens: usize) -> Word {
        let mut v = vec![0; len];
        for slot in v.iter_mut().rev() {
            *slot = idx % n_gens;
            idx /= n_gens;
        }
        Word(v)
    }

    /// All words of the given length, in deglex order.
    pub fn all(n_gens: usize, len: usize) -> Vec<Word> {
        let count = n_gens.pow(len as u32);
        (0..count).map(|i| Word::from_index(i, len, n_gens)).collect()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deglex_order_and_indexing() {
        assert!(Word(vec![1]) < Word(vec![0, 0]));
        assert!(Word(vec![0, 1]) < Word(vec![1, 0]));
        let w = Word(vec![2, 0, 1]);
        assert_eq!(Word::from_index(w.index(3), 3, 3), w);
        assert_eq!(Word(vec![1, 0, 1, 0]).positions(&Word(vec![1, 0])), vec![0, 2]);
        assert_eq!(Word::all(2, 2).len(), 4);
    }
}
