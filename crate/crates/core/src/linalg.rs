use crate::field::{Field, FieldElement};

/// Rank of a dense row-major matrix over `field`, by Gaussian elimination.
pub fn rank(field: &Field, rows: &[Vec<FieldElement>]) -> usize {
    let mut m: Vec<Vec<FieldElement>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(pivot) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = field.inv(m[r][c]).expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let (head, tail) = m.split_at_mut(r + 1);
        let prow = &head[r];
        for row in tail.iter_mut() {
            let factor = row[c];
            if factor.is_zero() {
                continue;
            }
            let neg = field.neg(factor);
            for (x, &p) in row[c..].iter_mut().zip(&prow[c..]) {
                *x = field.add(*x, field.mul(neg, p));
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(field: &Field, rows: &[&[usize]]) -> Vec<Vec<FieldElement>> {
        rows.iter()
            .map(|r| r.iter().map(|&c| field.element(c).unwrap()).collect())
            .collect()
    }

    #[test]
    fn rank_small_cases() {
        let f3 = Field::new(3).unwrap();
        assert_eq!(rank(&f3, &mat(&f3, &[&[1, 2], &[2, 1]])), 1);
        assert_eq!(rank(&f3, &mat(&f3, &[&[1, 0], &[0, 1]])), 2);
        assert_eq!(rank(&f3, &mat(&f3, &[&[0, 0, 0]])), 0);
        assert_eq!(rank(&f3, &mat(&f3, &[&[0, 1, 1], &[0, 2, 2], &[1, 0, 1]])), 2);
        let f4 = Field::new(4).unwrap();
        // (1, w) and (w, w^2) are proportional
        assert_eq!(rank(&f4, &mat(&f4, &[&[1, 2], &[2, 3]])), 1);
        assert_eq!(rank(&f4, &mat(&f4, &[&[1, 2], &[2, 1]])), 2);
    }
}
