//! Deterministic Schreier–Sims.

use super::perm::Perm;

struct Level {
    base_point: u32,
    gens: Vec<Perm>,
    orbit: Vec<u32>,
    /// `transversal[p]` maps the base point to `p`, for orbit points `p`.
    transversal: Vec<Option<Perm>>,
}

/// A base and strong generating set.
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Perm]) -> Self {
        let mut chain = StabChain { degree, levels: Vec::new() };
        for g in gens {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
            if !chain.contains(g) {
                chain.add_generator(0, g.clone());
            }
        }
        chain
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.sift(0, g.clone()).is_identity()
    }

    fn sift(&self, from: usize, mut g: Perm) -> Perm {
        for level in &self.levels[from..] {
            let b = g.apply(level.base_point);
            match &level.transversal[b as usize] {
                Some(u) => g = g.mul(&u.inverse()),
                None => return g,
            }
        }
        g
    }

    fn add_generator(&mut self, i: usize, g: Perm) {
        if i == self.levels.len() {
            let bp = g.first_moved().expect("identity never added");
            let mut transversal = vec![None; self.degree];
            transversal[bp as usize] = Some(Perm::identity(self.degree));
            self.levels.push(Level { base_point: bp, gens: Vec::new(), orbit: vec![bp], transversal });
        }
        self.levels[i].gens.push(g);
        self.extend_orbit(i);
        // Every Schreier generator at this level must sift through the rest.
        let mut k = 0;
        while k < self.levels[i].orbit.len() {
            let beta = self.levels[i].orbit[k];
            let mut s = 0;
            while s < self.levels[i].gens.len() {
                let level = &self.levels[i];
                let gen = &level.gens[s];
                let u_beta = level.transversal[beta as usize].as_ref().unwrap();
                let image = gen.apply(beta);
                let u_image = level.transversal[image as usize].as_ref().unwrap();
                let schreier = u_beta.mul(gen).mul(&u_image.inverse());
                let residue = self.sift(i + 1, schreier);
                if !residue.is_identity() {
                    self.add_generator(i + 1, residue);
                }
                s += 1;
            }
            k += 1;
        }
    }

    fn extend_orbit(&mut self, i: usize) {
        let level = &mut self.levels[i];
        let mut k = 0;
        while k < level.orbit.len() {
            let p = level.orbit[k];
            for g in &level.gens {
                let q = g.apply(p);
                if level.transversal[q as usize].is_none() {
                    let u = level.transversal[p as usize].as_ref().unwrap().mul(g);
                    level.transversal[q as usize] = Some(u);
                    level.orbit.push(q);
                }
            }
            k += 1;
        }
    }
}
