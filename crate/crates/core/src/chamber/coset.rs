use super::system::ChamberSystem;
use crate::error::{Error, Result};
use crate::groups::{CosetTable, Perm, PermGroup, Subgroup};

/// Isotropy data of a chamber-transitive action: the group, the principal
/// (chamber) stabilizer `H`, one face stabilizer `G_i ⊇ H` per type and,
/// optionally, one vertex stabilizer per cotype.
#[derive(Clone, Debug)]
pub struct HomogeneousSpec {
    pub group: PermGroup,
    pub principal: Subgroup,
    pub faces: Vec<Subgroup>,
    pub vertices: Option<Vec<Subgroup>>,
}

impl HomogeneousSpec {
    /// Checks `H ≤ G_i ≤ G` for every face and `G_i ≤ G_j` for `i ≠ j` when
    /// vertex groups are present.
    pub fn new(
        group: PermGroup,
        principal: Subgroup,
        faces: Vec<Subgroup>,
        vertices: Option<Vec<Subgroup>>,
    ) -> Result<Self> {
        group.check_parent(&principal)?;
        for (i, f) in faces.iter().enumerate() {
            group.check_parent(f)?;
            if !principal.is_subgroup_of(f) {
                return Err(Error::NotSubgroup(format!("principal group is not inside face group {}", i + 1)));
            }
        }
        if let Some(vs) = &vertices {
            if vs.len() != faces.len() {
                return Err(Error::InvalidInput("one vertex group per cotype required".into()));
            }
            for (j, v) in vs.iter().enumerate() {
                group.check_parent(v)?;
                for (i, f) in faces.iter().enumerate() {
                    if i != j && !f.is_subgroup_of(v) {
                        return Err(Error::NotSubgroup(format!(
                            "face group {} is not inside vertex group {}",
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        Ok(HomogeneousSpec { group, principal, faces, vertices })
    }

    pub fn rank(&self) -> usize {
        self.faces.len()
    }

    /// The coset chamber system `G/H` and the coset table it was built from.
    ///
    /// `gH` and `g'H` are `i`-adjacent iff `g G_i = g' G_i`, i.e.
    /// `g^{-1} g' ∈ G_i`. Chamber `c` is the coset with representative
    /// `cosets.representatives[c]`.
    pub fn coset_chambers(&self) -> Result<(ChamberSystem, CosetTable)> {
        let cosets = self.group.left_cosets(&self.principal)?;
        let n = cosets.index();
        let mut ids = Vec::with_capacity(self.rank());
        for face in &self.faces {
            let face_cosets = self.group.left_cosets(face)?;
            ids.push(
                cosets
                    .representatives
                    .iter()
                    .map(|&g| face_cosets.coset_of[g as usize] as usize)
                    .collect::<Vec<_>>(),
            );
        }
        Ok((ChamberSystem::from_class_ids(n, self.rank(), &ids), cosets))
    }

    /// Permutation of the coset chambers induced by left multiplication.
    pub fn chamber_action(&self, cosets: &CosetTable, g: &Perm) -> Perm {
        let images = cosets
            .representatives
            .iter()
            .map(|&rep| {
                let prod = g.compose(self.group.element(rep as usize));
                cosets.coset_of[self.group.index_of(&prod).expect("g lies in the group")]
            })
            .collect();
        Perm::from_images(images).expect("left multiplication permutes cosets")
    }
}

/// The chamber system of left cosets of the principal group.
pub fn from_cosets(spec: &HomogeneousSpec) -> Result<ChamberSystem> {
    Ok(spec.coset_chambers()?.0)
}
