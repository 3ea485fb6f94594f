//! Deterministic Schreier–Sims.
//!
//! Level `i` holds the strong generators fixing `base[..i]`, the orbit of
//! `base[i]` under them and an explicit transversal: `transversal[x]` maps
//! `base[i]` to `x`.

use crate::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(degree: usize, base_point: usize, gens: Vec<Permutation>) -> Self {
        let mut level = Level {
            base_point,
            gens,
            orbit: Vec::new(),
            transversal: vec![None; degree],
        };
        level.rebuild_orbit();
        level
    }

    /// Extends the orbit with the current generators, keeping existing
    /// transversal entries untouched so earlier sifts stay valid.
    fn rebuild_orbit(&mut self) {
        let degree = self.transversal.len();
        if self.orbit.is_empty() {
            self.transversal[self.base_point] = Some(Permutation::identity(degree));
            self.orbit.push(self.base_point);
        }
        let mut i = 0;
        while i < self.orbit.len() {
            let x = self.orbit[i];
            for g in &self.gens {
                let y = g.image(x);
                if self.transversal[y].is_none() {
                    let u = self.transversal[x].as_ref().unwrap().then(g);
                    self.transversal[y] = Some(u);
                    self.orbit.push(y);
                }
            }
            i += 1;
        }
    }
}

#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Permutation]) -> Self {
        let mut gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        gens.dedup();

        let mut base: Vec<usize> = Vec::new();
        for g in &gens {
            if base.iter().all(|&b| g.image(b) == b) {
                base.push(g.first_moved_point().unwrap());
            }
        }
        let mut levels: Vec<Level> = base
            .iter()
            .enumerate()
            .map(|(i, &b)| {
                let fixing = gens
                    .iter()
                    .filter(|g| base[..i].iter().all(|&c| g.image(c) == c))
                    .cloned()
                    .collect();
                Level::new(degree, b, fixing)
            })
            .collect();

        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        let mut i = levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            let mut jump = None;
            'scan: for oi in 0..levels[lvl].orbit.len() {
                let beta = levels[lvl].orbit[oi];
                for gi in 0..levels[lvl].gens.len() {
                    let x = &levels[lvl].gens[gi];
                    let u_beta = levels[lvl].transversal[beta].as_ref().unwrap();
                    let img = x.image(beta);
                    let u_img = levels[lvl].transversal[img].as_ref().unwrap();
                    let h = u_beta.then(x).then(&u_img.inverse());
                    if h.is_identity() {
                        continue;
                    }
                    let (y, j) = strip(&levels, h, lvl + 1);
                    if j < levels.len() || !y.is_identity() {
                        if j == levels.len() {
                            let b = y.first_moved_point().unwrap();
                            levels.push(Level::new(degree, b, Vec::new()));
                        }
                        for l in &mut levels[lvl + 1..=j] {
                            l.gens.push(y.clone());
                            l.rebuild_orbit();
                        }
                        jump = Some(j);
                        break 'scan;
                    }
                }
            }
            match jump {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
        chain.levels = levels;
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Product of the basic orbit lengths; `None` on u64 overflow.
    pub fn order(&self) -> Option<u64> {
        self.levels
            .iter()
            .try_fold(1u64, |acc, l| acc.checked_mul(l.orbit.len() as u64))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        let (residue, j) = strip(&self.levels, g.clone(), 0);
        j == self.levels.len() && residue.is_identity()
    }

    /// Every element exactly once, as products `u_{k-1} ··· u_1 u_0` of
    /// transversal elements.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut acc = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let reps: Vec<&Permutation> = level
                .orbit
                .iter()
                .map(|&x| level.transversal[x].as_ref().unwrap())
                .collect();
            let mut next = Vec::with_capacity(acc.len() * reps.len());
            for a in &acc {
                for u in &reps {
                    next.push(a.then(u));
                }
            }
            acc = next;
        }
        acc
    }
}

fn strip(levels: &[Level], mut h: Permutation, from: usize) -> (Permutation, usize) {
    for (j, level) in levels.iter().enumerate().skip(from) {
        let beta = h.image(level.base_point);
        match &level.transversal[beta] {
            None => return (h, j),
            Some(u) => h = h.then(&u.inverse()),
        }
    }
    (h, levels.len())
}
