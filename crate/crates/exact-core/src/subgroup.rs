use crate::UnimodularMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubgroupLabel {
    FullModular,
    GammaOdd,
    Theta,
    /// Never produced for a determinant-one matrix.
    Neither,
}

/// Membership of a PSL(2,Z) element in the two index-small subgroups.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubgroupMembership {
    pub full_modular: bool,
    pub gamma_odd: bool,
    pub theta: bool,
}

impl SubgroupMembership {
    /// All labels that apply, most specific first.
    pub fn labels(&self) -> Vec<SubgroupLabel> {
        let mut v = Vec::new();
        if self.gamma_odd {
            v.push(SubgroupLabel::GammaOdd);
        }
        if self.theta {
            v.push(SubgroupLabel::Theta);
        }
        if self.full_modular {
            v.push(SubgroupLabel::FullModular);
        } else {
            v.push(SubgroupLabel::Neither);
        }
        v
    }
}

// residues listed as (a, b, c, d) mod 2; the sign ambiguity of PSL is
// invisible mod 2
const GAMMA_ODD: [[u8; 4]; 3] = [[1, 0, 0, 1], [0, 1, 1, 1], [1, 1, 1, 0]];
const THETA: [[u8; 4]; 2] = [[1, 0, 0, 1], [0, 1, 1, 0]];

pub fn classify_subgroup(m: &UnimodularMatrix) -> SubgroupMembership {
    let r = m.mod2();
    SubgroupMembership {
        full_modular: true,
        gamma_odd: GAMMA_ODD.contains(&r),
        theta: THETA.contains(&r),
    }
}
