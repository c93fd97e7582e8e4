//! Families of unipotent characters: the set M(Γ), the non-abelian Fourier
//! pairing and matrices A(F), the curated family partition per Cartan type,
//! and the distinguished strictly positive row used by the bound.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed};

use crate::chartab::{character_table, CharacterTable};
use crate::classfn::ClassContext;
use crate::cyclo::{rat, Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::group::{symmetric_group, FiniteGroup};
use crate::perm::Perm;
use crate::roots::{CartanType, Family};

/// The finite group attached to a family.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum GammaType {
    Trivial,
    S2Power(u32),
    S3,
    S4,
    S5,
}

impl GammaType {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "1" | "trivial" => Ok(GammaType::Trivial),
            "S2" | "S2^1" => Ok(GammaType::S2Power(1)),
            "S3" => Ok(GammaType::S3),
            "S4" => Ok(GammaType::S4),
            "S5" => Ok(GammaType::S5),
            _ => {
                if let Some(e) = s.strip_prefix("S2^") {
                    let e: u32 = e
                        .parse()
                        .map_err(|_| Error::InvalidArgument(format!("bad gamma label {s}")))?;
                    if e == 0 || e > 6 {
                        return Err(Error::InvalidArgument(format!("bad S2 power {e}")));
                    }
                    return Ok(GammaType::S2Power(e));
                }
                Err(Error::InvalidArgument(format!("unknown gamma label {s}")))
            }
        }
    }

    /// Size of the associated Fourier matrix.
    pub fn family_size(&self) -> usize {
        match self {
            GammaType::Trivial => 1,
            GammaType::S2Power(e) => 4usize.pow(*e),
            GammaType::S3 => 8,
            GammaType::S4 => 21,
            GammaType::S5 => 39,
        }
    }

    /// A concrete permutation realization of Γ.
    pub fn group(&self) -> FiniteGroup {
        match self {
            GammaType::Trivial => {
                FiniteGroup::enumerate(vec![Perm::identity(1)]).unwrap()
            }
            GammaType::S2Power(e) => {
                let e = *e as usize;
                let gens: Vec<Perm> = (0..e)
                    .map(|i| {
                        Perm::from_cycles(2 * e, &[&[2 * i as u16, 2 * i as u16 + 1]]).unwrap()
                    })
                    .collect();
                FiniteGroup::enumerate(gens).unwrap()
            }
            GammaType::S3 => symmetric_group(3),
            GammaType::S4 => symmetric_group(4),
            GammaType::S5 => symmetric_group(5),
        }
    }
}

impl fmt::Display for GammaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GammaType::Trivial => write!(f, "1"),
            GammaType::S2Power(1) => write!(f, "S2"),
            GammaType::S2Power(e) => write!(f, "S2^{e}"),
            GammaType::S3 => write!(f, "S3"),
            GammaType::S4 => write!(f, "S4"),
            GammaType::S5 => write!(f, "S5"),
        }
    }
}

/// One element (x, σ) of M(Γ): a class representative of Γ together with an
/// irreducible character of its centralizer.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MSetElement {
    /// Conjugacy class index in Γ.
    pub class: usize,
    /// Element index of the class representative.
    pub rep: usize,
    /// Character slot within the class (0 is always the trivial character
    /// of the centralizer, so the distinguished row is the leading slot).
    pub sigma: usize,
}

struct CentralizerData {
    order: usize,
    table: CharacterTable,
    /// Table indices reordered so the trivial character comes first.
    char_order: Vec<usize>,
    /// Γ-element index -> centralizer class, for members of the centralizer.
    class_in_centralizer: HashMap<usize, usize>,
}

/// M(Γ) with enough structure to evaluate the pairing.
pub struct MSet {
    pub ctx: Arc<ClassContext>,
    pub elements: Vec<MSetElement>,
    centralizers: Vec<CentralizerData>,
}

impl MSet {
    pub fn build(gamma: FiniteGroup) -> Result<Self> {
        let ctx = Arc::new(ClassContext::new(gamma));
        let mut centralizers = Vec::new();
        let mut elements = Vec::new();
        for (class, &rep) in ctx.conj.representatives.iter().enumerate() {
            let cgroup = ctx.group.centralizer(rep)?;
            let cctx = Arc::new(ClassContext::new(cgroup));
            let table = character_table(cctx.clone())?;
            let trivial = table
                .irreducibles
                .iter()
                .position(|chi| chi.values.iter().all(|v| *v == Cyclotomic::one()))
                .ok_or_else(|| Error::Internal("table lacks a trivial character".into()))?;
            let mut char_order = vec![trivial];
            char_order.extend((0..table.irreducibles.len()).filter(|&i| i != trivial));
            let mut class_in_centralizer = HashMap::new();
            for (ci, p) in cctx.group.elements().iter().enumerate() {
                let gi = ctx
                    .group
                    .index_of(p)
                    .ok_or_else(|| Error::Internal("centralizer not inside Γ".into()))?;
                class_in_centralizer.insert(gi, cctx.conj.class_of[ci]);
            }
            for sigma in 0..char_order.len() {
                elements.push(MSetElement { class, rep, sigma });
            }
            centralizers.push(CentralizerData {
                order: cctx.group.order(),
                table,
                char_order,
                class_in_centralizer,
            });
        }
        Ok(MSet { ctx, elements, centralizers })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Value of character slot `sigma` of the centralizer of class `class`
    /// at the Γ-element `g` (which must centralize the representative).
    fn sigma_value(&self, class: usize, sigma: usize, g: usize) -> &Cyclotomic {
        let cd = &self.centralizers[class];
        let cls = cd.class_in_centralizer[&g];
        &cd.table.irreducibles[cd.char_order[sigma]].values[cls]
    }

    /// Lusztig's pairing {(x,σ),(y,τ)}.
    pub fn pairing(&self, a: usize, b: usize) -> Cyclotomic {
        let (ma, mb) = (self.elements[a], self.elements[b]);
        let g0 = &self.ctx.group;
        let (x, y) = (ma.rep, mb.rep);
        let mut acc = Cyclotomic::zero();
        for g in 0..g0.order() {
            let gyg = g0.conjugate(g, y);
            if g0.mul(x, gyg) != g0.mul(gyg, x) {
                continue;
            }
            let ginv_x_g = g0.conjugate(g0.inv(g), x);
            let s = self.sigma_value(ma.class, ma.sigma, gyg);
            let t = self.sigma_value(mb.class, mb.sigma, ginv_x_g);
            acc = acc.add(&s.mul(&t.conj()));
        }
        let scale = rat(
            1,
            (self.centralizers[ma.class].order * self.centralizers[mb.class].order) as i64,
        );
        acc.scale(&scale)
    }

    /// The full pairing matrix on M(Γ).
    pub fn pairing_matrix(&self) -> Vec<Vec<Cyclotomic>> {
        let n = self.len();
        (0..n).map(|i| (0..n).map(|j| self.pairing(i, j)).collect()).collect()
    }
}

/// M(Γ) as a plain list (deterministic order: classes by representative
/// index, then the centralizer characters with trivial first).
pub fn m_set(gamma: FiniteGroup) -> Result<Vec<MSetElement>> {
    Ok(MSet::build(gamma)?.elements)
}

/// The Fourier matrix A(F) of a family with group `gamma`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FourierMatrix {
    pub gamma: GammaType,
    pub labels: Vec<MSetElement>,
    pub entries: Vec<Vec<Cyclotomic>>,
}

impl FourierMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn is_real_rational(&self) -> bool {
        self.entries.iter().flatten().all(|v| v.is_rational())
    }

    /// Exact check that the matrix squares to the identity.
    pub fn squares_to_identity(&self) -> bool {
        let n = self.size();
        for i in 0..n {
            for j in 0..n {
                let mut acc = Cyclotomic::zero();
                for k in 0..n {
                    acc = acc.add(&self.entries[i][k].mul(&self.entries[k][j]));
                }
                let expect =
                    if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
                if acc != expect {
                    return false;
                }
            }
        }
        true
    }
}

/// A(F) for the supported groups Γ. For Γ = S₂ᵉ with e > 1 this is the
/// block-diagonal matrix built from 4ᵉ⁻¹ copies of the 4×4 block, with
/// consecutive blocks of four; the labels tile the M(S₂) labels per block.
pub fn fourier_matrix(gamma: GammaType) -> Result<FourierMatrix> {
    match gamma {
        GammaType::Trivial => Ok(FourierMatrix {
            gamma,
            labels: vec![MSetElement { class: 0, rep: 0, sigma: 0 }],
            entries: vec![vec![Cyclotomic::one()]],
        }),
        GammaType::S2Power(e) => {
            let base = MSet::build(GammaType::S2Power(1).group())?;
            let block = base.pairing_matrix();
            let copies = 4usize.pow(e - 1);
            let n = 4 * copies;
            let mut entries = vec![vec![Cyclotomic::zero(); n]; n];
            let mut labels = Vec::with_capacity(n);
            for c in 0..copies {
                for i in 0..4 {
                    labels.push(base.elements[i]);
                    for j in 0..4 {
                        entries[4 * c + i][4 * c + j] = block[i][j].clone();
                    }
                }
            }
            Ok(FourierMatrix { gamma, labels, entries })
        }
        GammaType::S3 | GammaType::S4 | GammaType::S5 => {
            let mset = MSet::build(gamma.group())?;
            let entries = mset.pairing_matrix();
            Ok(FourierMatrix { gamma, labels: mset.elements, entries })
        }
    }
}

/// One unipotent character in a family: either a principal-series member
/// χ_φ (with its φ label) or a non-principal-series member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMember {
    pub label: String,
    /// Some(φ) when the member is the principal-series character χ_φ.
    pub phi: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub cartan_type: CartanType,
    pub id: String,
    pub gamma: GammaType,
    /// Member order matches the Fourier matrix labeling.
    pub members: Vec<FamilyMember>,
    pub fourier: FourierMatrix,
}

/// The distinguished strictly positive row through a member's block.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PositiveRow {
    pub row: usize,
    pub phi: String,
    /// Columns of the member's block, restricted to that block.
    pub coefficients: Vec<Rational>,
}

const FAMILY_DATA: &str = include_str!("../data/families.txt");

struct RawFamily {
    gamma: GammaType,
    members: Vec<FamilyMember>,
}

fn parse_family_data() -> Result<HashMap<String, Vec<RawFamily>>> {
    let mut out: HashMap<String, Vec<RawFamily>> = HashMap::new();
    let mut current_type: Option<String> = None;
    for (lineno, raw) in FAMILY_DATA.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: &str| {
            Error::DataIntegrity(format!("families.txt line {}: {msg}", lineno + 1))
        };
        let mut words = line.split_whitespace();
        match words.next().unwrap() {
            "version" => {
                if words.next() != Some("1") {
                    return Err(bad("unsupported data version"));
                }
            }
            "type" => {
                let label = words.next().ok_or_else(|| bad("missing type label"))?;
                current_type = Some(label.to_string());
                out.entry(label.to_string()).or_default();
            }
            "family" => {
                let t = current_type.clone().ok_or_else(|| bad("family before type"))?;
                let gamma_word = words
                    .next()
                    .and_then(|w| w.strip_prefix("gamma="))
                    .ok_or_else(|| bad("family needs gamma="))?;
                let gamma = GammaType::parse(gamma_word)?;
                out.get_mut(&t).unwrap().push(RawFamily { gamma, members: Vec::new() });
            }
            kind @ ("ps" | "x") => {
                let t = current_type.clone().ok_or_else(|| bad("member before type"))?;
                let label = words.next().ok_or_else(|| bad("member needs a label"))?;
                let fam = out
                    .get_mut(&t)
                    .and_then(|f| f.last_mut())
                    .ok_or_else(|| bad("member before family"))?;
                fam.members.push(FamilyMember {
                    label: label.to_string(),
                    phi: (kind == "ps").then(|| label.to_string()),
                });
            }
            other => return Err(bad(&format!("unknown directive {other}"))),
        }
    }
    // structural validation
    for (t, fams) in &out {
        for (i, fam) in fams.iter().enumerate() {
            let bad = |msg: String| Error::DataIntegrity(format!("{t} family {i}: {msg}"));
            if fam.members.len() != fam.gamma.family_size() {
                return Err(bad(format!(
                    "size {} does not match gamma {}",
                    fam.members.len(),
                    fam.gamma
                )));
            }
            match fam.gamma {
                GammaType::Trivial => {
                    if fam.members[0].phi.is_none() {
                        return Err(bad("singleton member must be principal series".into()));
                    }
                }
                GammaType::S2Power(_) => {
                    for b in (0..fam.members.len()).step_by(4) {
                        if fam.members[b].phi.is_none() {
                            return Err(bad("block-leading slot must be principal series".into()));
                        }
                    }
                }
                _ => {
                    if fam.members[0].phi.is_none() {
                        return Err(bad("leading slot must be principal series".into()));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Resolve a single-component type to its data key, or report why family
/// data is unavailable.
fn data_key(t: &CartanType) -> Result<String> {
    if t.components.len() != 1 {
        return Err(Error::InvalidArgument(
            "families_of_type expects an irreducible type".into(),
        ));
    }
    let c = t.components[0];
    let split_key = |family: Family, rank: usize| {
        let f = if family == Family::C { Family::B } else { family };
        format!("{:?}{rank}", f)
    };
    match (c.family, c.rank, c.twist) {
        // twisted A reduces to the split family data
        (Family::A, r, 1 | 2) if r <= 5 => Ok(split_key(Family::A, r)),
        (Family::B | Family::C, 2 | 3, 1) => Ok(split_key(c.family, c.rank)),
        (Family::G, 2, 1) => Ok("G2".into()),
        (Family::D, 4, 1) => Ok("D4".into()),
        _ => Err(Error::FamilyDataUnavailable(t.to_string())),
    }
}

/// The curated family partition for one irreducible Cartan type.
pub fn families_of_type(t: &CartanType) -> Result<Vec<FamilyRecord>> {
    let key = data_key(t)?;
    let data = parse_family_data()?;
    let fams = data
        .get(&key)
        .ok_or_else(|| Error::FamilyDataUnavailable(t.to_string()))?;
    fams.iter()
        .enumerate()
        .map(|(i, raw)| {
            Ok(FamilyRecord {
                cartan_type: t.clone(),
                id: format!("{key}-f{i}"),
                gamma: raw.gamma,
                members: raw.members.clone(),
                fourier: fourier_matrix(raw.gamma)?,
            })
        })
        .collect()
}

fn entry_as_positive_rational(v: &Cyclotomic) -> Result<Rational> {
    let r = v
        .as_rational()
        .ok_or_else(|| Error::DataIntegrity("positive row entry not rational".into()))?;
    if !r.is_positive() {
        return Err(Error::DataIntegrity("positive row entry not positive".into()));
    }
    if r > Rational::one() {
        return Err(Error::DataIntegrity("positive row entry above 1".into()));
    }
    Ok(r)
}

/// The strictly positive almost-character row covering `member`.
pub fn positive_row(fam: &FamilyRecord, member: usize) -> Result<PositiveRow> {
    if member >= fam.members.len() {
        return Err(Error::InvalidArgument("member index out of range".into()));
    }
    let (row, cols) = match fam.gamma {
        GammaType::Trivial => (0, 0..1),
        GammaType::S2Power(_) => {
            let block = member / 4;
            (4 * block, 4 * block..4 * block + 4)
        }
        _ => (0, 0..fam.members.len()),
    };
    let phi = fam.members[row]
        .phi
        .clone()
        .ok_or_else(|| Error::DataIntegrity("positive row is not principal series".into()))?;
    let coefficients: Vec<Rational> = cols
        .map(|j| entry_as_positive_rational(&fam.fourier.entries[row][j]))
        .collect::<Result<_>>()?;
    Ok(PositiveRow { row, phi, coefficients })
}

/// C_Φ: the set of positive-row coefficients of the type, with the
/// componentwise product rule for reducible types.
pub fn c_phi_set(t: &CartanType) -> Result<BTreeSet<Rational>> {
    if t.components.is_empty() {
        return Ok([Rational::one()].into_iter().collect());
    }
    let mut acc: BTreeSet<Rational> = [Rational::one()].into_iter().collect();
    for comp in &t.components {
        let comp_type = CartanType { components: vec![*comp] };
        let mut comp_set: BTreeSet<Rational> = BTreeSet::new();
        for fam in families_of_type(&comp_type)? {
            for block in 0..fam.members.len().div_ceil(4).max(1) {
                let member = (4 * block).min(fam.members.len() - 1);
                for c in positive_row(&fam, member)?.coefficients {
                    comp_set.insert(c);
                }
                if !matches!(fam.gamma, GammaType::S2Power(_)) {
                    break;
                }
            }
        }
        acc = acc
            .iter()
            .flat_map(|a| comp_set.iter().map(move |b| a * b))
            .collect();
    }
    Ok(acc)
}

/// The paper's 4×4 block: ½·[[1,1,1,1],[1,1,-1,-1],[1,-1,1,-1],[1,-1,-1,1]].
pub fn s2_reference_block() -> Vec<Vec<Cyclotomic>> {
    let signs: [[i64; 4]; 4] =
        [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]];
    signs
        .iter()
        .map(|row| {
            row.iter()
                .map(|&s| Cyclotomic::from_rational(rat(s, 2)))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_set_sizes() {
        assert_eq!(m_set(GammaType::Trivial.group()).unwrap().len(), 1);
        assert_eq!(m_set(GammaType::S2Power(1).group()).unwrap().len(), 4);
        assert_eq!(m_set(GammaType::S3.group()).unwrap().len(), 8);
        // independent count: sum over classes of #irr(centralizer)
        let s3 = symmetric_group(3);
        let ctx = ClassContext::new(s3);
        let mut total = 0;
        for &rep in &ctx.conj.representatives {
            let c = ctx.group.centralizer(rep).unwrap();
            total += ClassContext::new(c).num_classes();
        }
        assert_eq!(total, 8);
    }

    #[test]
    fn s2_matrix_matches_reference() {
        let m = fourier_matrix(GammaType::S2Power(1)).unwrap();
        assert_eq!(m.entries, s2_reference_block());
    }

    #[test]
    fn s3_matrix_properties() {
        let m = fourier_matrix(GammaType::S3).unwrap();
        assert_eq!(m.size(), 8);
        assert!(m.is_symmetric());
        assert!(m.is_real_rational());
        assert!(m.squares_to_identity());
    }

    #[test]
    fn s2_square_block_diagonal() {
        let m = fourier_matrix(GammaType::S2Power(2)).unwrap();
        assert_eq!(m.size(), 16);
        assert!(m.squares_to_identity());
        // off-block entries vanish, on-block entries copy the 4×4 block
        let block = s2_reference_block();
        for i in 0..16 {
            for j in 0..16 {
                if i / 4 == j / 4 {
                    assert_eq!(m.entries[i][j], block[i % 4][j % 4]);
                } else {
                    assert!(m.entries[i][j].is_zero());
                }
            }
        }
    }

    #[test]
    fn product_pairing_is_kronecker() {
        // oracle for the S2^e construction: the honest pairing matrix of
        // S2 x S2 is the Kronecker square of the S2 matrix under the
        // product bijection M(Γ1×Γ2) = M(Γ1)×M(Γ2)
        let base = MSet::build(GammaType::S2Power(1).group()).unwrap();
        let a = base.pairing_matrix();
        let prod = MSet::build(GammaType::S2Power(2).group()).unwrap();
        let p = prod.pairing_matrix();
        assert_eq!(prod.len(), 16);
        // identify each element of M(S2×S2) with a pair of M(S2) indices by
        // restricting the class rep and the character to each factor
        let g = &prod.ctx.group;
        let swap0 = g.index_of(&Perm::from_cycles(4, &[&[0, 1]]).unwrap()).unwrap();
        let swap1 = g.index_of(&Perm::from_cycles(4, &[&[2, 3]]).unwrap()).unwrap();
        let factor = |m: usize| -> (usize, usize) {
            let el = prod.elements[m];
            let rep = g.element(el.rep);
            let x0 = usize::from(rep.apply(0) == 1);
            let x1 = usize::from(rep.apply(2) == 3);
            // sign of sigma on each factor generator (both lie in every
            // centralizer here since the group is abelian)
            let s0 = usize::from(*prod.sigma_value(el.class, el.sigma, swap0) != Cyclotomic::one());
            let s1 = usize::from(*prod.sigma_value(el.class, el.sigma, swap1) != Cyclotomic::one());
            // M(S2) order: (1,triv),(1,sgn),(t,triv),(t,sgn)
            (2 * x0 + s0, 2 * x1 + s1)
        };
        for i in 0..16 {
            let (i0, i1) = factor(i);
            for j in 0..16 {
                let (j0, j1) = factor(j);
                assert_eq!(p[i][j], a[i0][j0].mul(&a[i1][j1]));
            }
        }
    }

    #[test]
    fn b2_family_structure() {
        let t = CartanType::parse("B2").unwrap();
        let fams = families_of_type(&t).unwrap();
        let mut sizes: Vec<usize> = fams.iter().map(|f| f.members.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 4]);
        let big = fams.iter().find(|f| f.members.len() == 4).unwrap();
        assert_eq!(big.gamma, GammaType::S2Power(1));
        let pr = positive_row(big, 3).unwrap();
        assert_eq!(pr.coefficients, vec![rat(1, 2); 4]);
    }

    #[test]
    fn g2_family_structure() {
        let t = CartanType::parse("G2").unwrap();
        let fams = families_of_type(&t).unwrap();
        let mut sizes: Vec<usize> = fams.iter().map(|f| f.members.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 8]);
        let big = fams.iter().find(|f| f.members.len() == 8).unwrap();
        assert_eq!(big.gamma, GammaType::S3);
        let pr = positive_row(big, 5).unwrap();
        assert_eq!(pr.coefficients.len(), 8);
        assert!(pr.coefficients.iter().all(|c| c.is_positive()));
    }

    #[test]
    fn c_phi_sets() {
        let set = |label: &str| -> Vec<Rational> {
            c_phi_set(&CartanType::parse(label).unwrap()).unwrap().into_iter().collect()
        };
        assert_eq!(set("A2"), vec![Rational::one()]);
        assert_eq!(set("B2"), vec![rat(1, 2), rat(1, 1)]);
        assert_eq!(set("A1xB2"), vec![rat(1, 2), rat(1, 1)]);
        assert_eq!(set("G2"), vec![rat(1, 6), rat(1, 3), rat(1, 2), rat(1, 1)]);
        assert_eq!(set("B2xB2"), vec![rat(1, 4), rat(1, 2), rat(1, 1)]);
    }

    #[test]
    fn unavailable_and_invalid_types() {
        match families_of_type(&CartanType::parse("3D4").unwrap()) {
            Err(Error::FamilyDataUnavailable(_)) => {}
            other => panic!("expected unavailable, got {:?}", other.map(|v| v.len())),
        }
        match families_of_type(&CartanType::parse("F4").unwrap()) {
            Err(Error::FamilyDataUnavailable(_)) => {}
            other => panic!("expected unavailable, got {:?}", other.map(|v| v.len())),
        }
        assert!(CartanType::parse("H4").is_err());
    }

    #[test]
    fn twisted_a_reuses_split_data() {
        let split = families_of_type(&CartanType::parse("A3").unwrap()).unwrap();
        let twisted = families_of_type(&CartanType::parse("2A3").unwrap()).unwrap();
        assert_eq!(split.len(), twisted.len());
        for (a, b) in split.iter().zip(&twisted) {
            assert_eq!(a.members, b.members);
        }
    }

    #[test]
    fn principal_series_counts_match_weyl_classes() {
        use crate::roots::RootSystemData;
        for label in ["A1", "A2", "A3", "B2", "B3", "G2", "D4"] {
            let t = CartanType::parse(label).unwrap();
            let fams = families_of_type(&t).unwrap();
            let ps: usize = fams
                .iter()
                .map(|f| f.members.iter().filter(|m| m.phi.is_some()).count())
                .sum();
            let rs = RootSystemData::build(&t).unwrap();
            let classes = rs.weyl.conjugacy_classes().classes.len();
            assert_eq!(ps, classes, "{label}: principal series vs irr(W)");
        }
    }
}
