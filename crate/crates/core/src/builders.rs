//! Constructors for the standard small groups used by the corpus.

use crate::group::Group;
use crate::perm::Permutation;

fn build(degree: usize, gens: Vec<Permutation>) -> Group {
    Group::generate(degree, gens).expect("builtin group")
}

fn from_fn(degree: usize, f: impl Fn(usize) -> usize) -> Permutation {
    Permutation::from_images((0..degree).map(|x| f(x) as u32).collect()).expect("bijection")
}

pub fn trivial() -> Group {
    build(1, Vec::new())
}

/// Cyclic group of order `n` acting regularly on `n` points.
pub fn cyclic(n: usize) -> Group {
    assert!(n >= 1);
    build(n, vec![from_fn(n, |x| (x + 1) % n)])
}

/// Dihedral group of order `2n`, the symmetries of an `n`-gon; for `n <= 2`
/// the regular representation of `C_2` or `C_2 × C_2`.
pub fn dihedral(n: usize) -> Group {
    match n {
        1 => cyclic(2),
        2 => elementary_abelian(2, 2),
        _ => build(
            n,
            vec![from_fn(n, |x| (x + 1) % n), from_fn(n, |x| (n - x) % n)],
        ),
    }
}

pub fn symmetric(n: usize) -> Group {
    if n < 2 {
        return build(n.max(1), Vec::new());
    }
    build(n, vec![from_fn(n, |x| (x + 1) % n), from_fn(n, |x| [1, 0].get(x).copied().unwrap_or(x))])
}

pub fn alternating(n: usize) -> Group {
    if n < 3 {
        return build(n.max(1), Vec::new());
    }
    let gens = (2..n)
        .map(|k| from_fn(n, |x| if x == 0 { 1 } else if x == 1 { k } else if x == k { 0 } else { x }))
        .collect();
    build(n, gens)
}

/// Elementary abelian group of order `p^k` on `k` disjoint `p`-cycles.
pub fn elementary_abelian(p: usize, k: usize) -> Group {
    let degree = (p * k).max(1);
    let gens = (0..k)
        .map(|i| {
            from_fn(degree, |x| {
                if x / p == i {
                    i * p + (x % p + 1) % p
                } else {
                    x
                }
            })
        })
        .collect();
    build(degree, gens)
}

/// Dicyclic group `⟨a, b | a^{2m}, b^2 = a^m, a^b = a^{-1}⟩` of order `4m`
/// in its regular representation. Element `a^i b^j` is point `2i + j`.
pub fn dicyclic(m: usize) -> Group {
    let n2 = 2 * m;
    let point = |i: usize, j: usize| 2 * (i % n2) + j;
    let mul = |(i, j): (usize, usize), (k, l): (usize, usize)| -> (usize, usize) {
        match (j, l) {
            (0, _) => ((i + k) % n2, l),
            (1, 0) => ((i + n2 - k) % n2, 1),
            _ => ((i + n2 - k + m) % n2, 0),
        }
    };
    let right = |g: (usize, usize)| {
        from_fn(2 * n2, |x| {
            let (i, j) = mul((x / 2, x % 2), g);
            point(i, j)
        })
    };
    build(2 * n2, vec![right((1, 0)), right((0, 1))])
}

/// Generalized quaternion group of order `n` (8 or 16).
pub fn quaternion(n: usize) -> Group {
    assert!(n >= 8 && n.is_power_of_two());
    dicyclic(n / 4)
}

/// `C_p ⋊ C_q` realised as affine maps `x ↦ rx + c` on `Z_p`, where `r`
/// is the smallest element of multiplicative order `q`.
pub fn frobenius(p: usize, q: usize) -> Group {
    assert!((p - 1) % q == 0);
    let r = (2..p)
        .find(|&r| {
            let mut y = 1;
            let mut ord = 0;
            loop {
                y = y * r % p;
                ord += 1;
                if y == 1 {
                    break;
                }
            }
            ord == q
        })
        .unwrap_or(1);
    build(p, vec![from_fn(p, |x| (x + 1) % p), from_fn(p, |x| x * r % p)])
}

pub fn direct_product(g1: &Group, g2: &Group) -> Group {
    let degree = g1.degree() + g2.degree();
    let mut gens: Vec<Permutation> = g1.generators().iter().map(|g| g.shifted(0, degree)).collect();
    gens.extend(g2.generators().iter().map(|g| g.shifted(g1.degree(), degree)));
    build(degree, gens)
}

/// 2×2 matrices over `F_p` acting on the row vectors `F_p^2 \ {0}`; vector
/// `(u, v)` is point `u p + v - 1`.
fn matrix_group(p: usize, mats: &[[usize; 4]]) -> Group {
    let degree = p * p - 1;
    let gens = mats
        .iter()
        .map(|m| {
            from_fn(degree, |x| {
                let (u, v) = ((x + 1) / p, (x + 1) % p);
                let nu = (u * m[0] + v * m[2]) % p;
                let nv = (u * m[1] + v * m[3]) % p;
                nu * p + nv - 1
            })
        })
        .collect::<Vec<_>>();
    build(degree, gens)
}

pub fn sl2(p: usize) -> Group {
    matrix_group(p, &[[1, 1, 0, 1], [1, 0, 1, 1]])
}

pub fn gl2(p: usize) -> Group {
    let g = (2..p.max(3))
        .find(|&g| (1..p - 1).all(|k| (0..k).fold(1, |acc, _| acc * g % p) != 1))
        .unwrap_or(1);
    matrix_group(p, &[[1, 1, 0, 1], [1, 0, 1, 1], [g, 0, 0, 1]])
}

/// The order-1875 group `(L1 × L2) ⋊ ⟨α⟩` with its named generators.
pub struct ExampleGroup {
    pub group: Group,
    pub a: Permutation,
    pub b: Permutation,
    pub a2: Permutation,
    pub b2: Permutation,
    pub alpha: Permutation,
}

/// Points `(i, j) ∈ Z5 × Z5` are `5i + j` on the first block and
/// `25 + 5i + j` on the second.
pub fn example_group() -> ExampleGroup {
    let on_blocks = |f: &dyn Fn(usize, usize) -> (usize, usize), blocks: &[usize]| {
        from_fn(50, |x| {
            let (blk, r) = (x / 25, x % 25);
            if !blocks.contains(&blk) {
                return x;
            }
            let (i, j) = f(r / 5, r % 5);
            25 * blk + 5 * (i % 5) + j % 5
        })
    };
    let a = on_blocks(&|i, j| (i + 1, j), &[0]);
    let b = on_blocks(&|i, j| (i, j + 1), &[0]);
    let a2 = on_blocks(&|i, j| (i + 1, j), &[1]);
    let b2 = on_blocks(&|i, j| (i, j + 1), &[1]);
    let alpha = on_blocks(&|i, j| ((5 - j) % 5, (i + 5 - j) % 5), &[0, 1]);
    let group = build(50, vec![a.clone(), b.clone(), a2.clone(), b2.clone(), alpha.clone()]);
    ExampleGroup {
        group,
        a,
        b,
        a2,
        b2,
        alpha,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(trivial().order(), 1);
        assert_eq!(cyclic(6).order(), 6);
        assert_eq!(dihedral(4).order(), 8);
        assert_eq!(dihedral(5).order(), 10);
        assert_eq!(dihedral(2).order(), 4);
        assert_eq!(symmetric(3).order(), 6);
        assert_eq!(symmetric(5).order(), 120);
        assert_eq!(alternating(5).order(), 60);
        assert_eq!(elementary_abelian(2, 3).order(), 8);
        assert_eq!(quaternion(8).order(), 8);
        assert_eq!(quaternion(16).order(), 16);
        assert_eq!(dicyclic(3).order(), 12);
        assert_eq!(frobenius(7, 3).order(), 21);
        assert_eq!(frobenius(5, 4).order(), 20);
        assert_eq!(sl2(3).order(), 24);
        assert_eq!(gl2(3).order(), 48);
        assert_eq!(sl2(5).order(), 120);
        assert_eq!(direct_product(&cyclic(5), &cyclic(5)).order(), 25);
        assert_eq!(direct_product(&symmetric(3), &trivial()).order(), 6);
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q = quaternion(8);
        let t = q.elements().unwrap();
        assert_eq!(t.ids().filter(|&x| t.order_of(x) == 2).count(), 1);
        let q16 = quaternion(16);
        let t = q16.elements().unwrap();
        assert_eq!(t.ids().filter(|&x| t.order_of(x) == 2).count(), 1);
    }

    #[test]
    fn example_relations() {
        let ex = example_group();
        assert_eq!(ex.group.order(), 1875);
        assert_eq!(ex.group.degree(), 50);
        assert_eq!(ex.a.conjugate_by(&ex.alpha), ex.b);
        let inv_ab = ex.a.inverse().then(&ex.b.inverse());
        assert_eq!(ex.b.conjugate_by(&ex.alpha), inv_ab);
        assert_eq!(ex.alpha.order(), 3);
        let l1 = elementary_abelian(5, 2);
        assert_eq!(direct_product(&l1, &l1).order(), 625);
    }
}
