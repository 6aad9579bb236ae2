//! Permutation groups given by generators, with a lazily built element store.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::subgroup::Subgroup;

pub const DEFAULT_ENUMERATION_CAP: usize = 5_000_000;
pub const DEFAULT_CLASS_CAP: usize = 1_000_000;

/// Groups up to this order get a full multiplication table.
const TABLE_LIMIT: usize = 1024;

static ENUMERATION_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_ENUMERATION_CAP);

pub fn enumeration_cap() -> usize {
    ENUMERATION_CAP.load(Ordering::Relaxed)
}

/// Overrides the process-wide default enumeration cap.
pub fn set_enumeration_cap(cap: usize) {
    ENUMERATION_CAP.store(cap.max(1), Ordering::Relaxed);
}

/// Breadth-first closure of `generators` under composition.
///
/// Insertion order is deterministic for a fixed generator order; the
/// identity always comes first.
pub fn closure(degree: usize, generators: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    if cap == 0 {
        return Err(Error::invalid("cap must be positive"));
    }
    for g in generators {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch { left: degree, right: g.degree() });
        }
    }
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut out = vec![id.clone()];
    seen.insert(id);
    let mut head = 0;
    while head < out.len() {
        let e = out[head].clone();
        head += 1;
        for g in generators {
            let n = e.then(g);
            if !seen.contains(&n) {
                if out.len() >= cap {
                    return Err(Error::CapExceeded { cap, partial: out.len() });
                }
                seen.insert(n.clone());
                out.push(n);
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) enum MemoKey {
    Sylow(u64),
    Op(u64),
    OPi(Vec<u64>),
    Center,
    Derived,
    Fitting,
    Fitting2,
    ClassClosure(u32),
}

/// Conjugacy classes of a materialized group.
pub struct ClassTable {
    class_of: Vec<u32>,
    reps: Vec<u32>,
    sizes: Vec<u64>,
}

impl ClassTable {
    pub fn class_of(&self, id: u32) -> usize {
        self.class_of[id as usize] as usize
    }

    /// Least element id of each class, in increasing order.
    pub fn representatives(&self) -> &[u32] {
        &self.reps
    }

    pub fn size(&self, class: usize) -> u64 {
        self.sizes[class]
    }

    pub fn index_of(&self, id: u32) -> u64 {
        self.sizes[self.class_of(id)]
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }
}

/// All elements of a group, lexicographically sorted by image array, with
/// identifiers equal to their positions. The identity is always id 0.
pub struct ElementStore {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    table: Option<Vec<u32>>,
    inverse: Vec<u32>,
    orders: Vec<u64>,
    generator_ids: Vec<u32>,
    classes: OnceLock<ClassTable>,
    memo: Mutex<HashMap<MemoKey, ElementSet>>,
}

impl ElementStore {
    fn build(mut elements: Vec<Permutation>, generators: &[Permutation]) -> ElementStore {
        elements.sort();
        let index: HashMap<Permutation, u32> =
            elements.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        let n = elements.len();
        let inverse = elements.iter().map(|p| index[&p.inverse()]).collect();
        let orders = elements.iter().map(|p| p.order()).collect();
        let generator_ids = generators.iter().map(|g| index[g]).collect();
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(index[&a.then(b)]);
                }
            }
            t
        });
        ElementStore {
            elements,
            index,
            table,
            inverse,
            orders,
            generator_ids,
            classes: OnceLock::new(),
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, id: u32) -> &Permutation {
        &self.elements[id as usize]
    }

    pub fn id_of(&self, p: &Permutation) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub fn generator_ids(&self) -> &[u32] {
        &self.generator_ids
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.table {
            Some(t) => t[a as usize * self.elements.len() + b as usize],
            None => self.index[&self.elements[a as usize].then(&self.elements[b as usize])],
        }
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    pub fn order_of(&self, a: u32) -> u64 {
        self.orders[a as usize]
    }

    /// `g^-1 x g`.
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn pow(&self, a: u32, mut k: u64) -> u32 {
        let mut acc = 0;
        let mut sq = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            k >>= 1;
        }
        acc
    }

    pub fn commutes(&self, a: u32, b: u32) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    /// Subgroup generated by `gens`.
    pub fn generate(&self, gens: &[u32]) -> ElementSet {
        let mut set = ElementSet::empty(self.len());
        set.insert(0);
        self.close_from(set, vec![0], gens)
    }

    /// Subgroup generated by the subgroup `base` (with generators `base_gens`)
    /// and the extra elements `extra`.
    pub fn extend(&self, base: &ElementSet, base_gens: &[u32], extra: &[u32]) -> ElementSet {
        if extra.iter().all(|&x| base.contains(x)) {
            return base.clone();
        }
        let gens: Vec<u32> = base_gens.iter().chain(extra).copied().collect();
        let frontier: Vec<u32> = base.iter().collect();
        self.close_from(base.clone(), frontier, &gens)
    }

    fn close_from(&self, mut set: ElementSet, frontier: Vec<u32>, gens: &[u32]) -> ElementSet {
        let mut queue: VecDeque<u32> = frontier.into();
        while let Some(e) = queue.pop_front() {
            for &g in gens {
                let n = self.mul(e, g);
                if set.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        set
    }

    pub fn classes(&self) -> &ClassTable {
        self.classes.get_or_init(|| {
            let n = self.len();
            let mut class_of = vec![u32::MAX; n];
            let mut reps = Vec::new();
            let mut sizes = Vec::new();
            for start in 0..n as u32 {
                if class_of[start as usize] != u32::MAX {
                    continue;
                }
                let c = reps.len() as u32;
                reps.push(start);
                class_of[start as usize] = c;
                let mut queue = vec![start];
                let mut size = 1u64;
                while let Some(y) = queue.pop() {
                    for &g in &self.generator_ids {
                        let z = self.conj(y, g);
                        if class_of[z as usize] == u32::MAX {
                            class_of[z as usize] = c;
                            size += 1;
                            queue.push(z);
                        }
                    }
                }
                sizes.push(size);
            }
            ClassTable { class_of, reps, sizes }
        })
    }

    /// Elements commuting with every element of `ids`.
    pub fn centraliser_of(&self, ids: &[u32]) -> ElementSet {
        let mut set = ElementSet::empty(self.len());
        for g in 0..self.len() as u32 {
            if ids.iter().all(|&s| self.commutes(g, s)) {
                set.insert(g);
            }
        }
        set
    }

    pub(crate) fn memo_get(&self, key: &MemoKey) -> Option<ElementSet> {
        self.memo.lock().unwrap().get(key).cloned()
    }

    pub(crate) fn memo_put(&self, key: MemoKey, set: ElementSet) {
        self.memo.lock().unwrap().insert(key, set);
    }
}

struct GroupInner {
    degree: usize,
    generators: Vec<Permutation>,
    factors: Option<Vec<Group>>,
    known_order: Option<BigUint>,
    store: OnceLock<ElementStore>,
}

/// A finite permutation group: generators plus an element store that is
/// materialized on first use, subject to an enumeration cap.
///
/// Groups built as direct products carry their factors, acting on
/// consecutive blocks of points, so that class indices and centralisers can
/// be computed factor by factor without enumerating the product.
#[derive(Clone)]
pub struct Group {
    inner: Arc<GroupInner>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree())
            .field("generators", &self.inner.generators)
            .field("factors", &self.inner.factors.as_ref().map(|f| f.len()))
            .finish()
    }
}

impl Group {
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Group> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: g.degree() });
            }
        }
        Ok(Group {
            inner: Arc::new(GroupInner {
                degree,
                generators,
                factors: None,
                known_order: None,
                store: OnceLock::new(),
            }),
        })
    }

    pub fn trivial(degree: usize) -> Group {
        Group::from_generators(degree, Vec::new()).unwrap()
    }

    /// A group whose full element list is already known.
    pub(crate) fn with_elements(degree: usize, generators: Vec<Permutation>, elements: Vec<Permutation>) -> Group {
        let store = ElementStore::build(elements, &generators);
        let g = Group {
            inner: Arc::new(GroupInner {
                degree,
                known_order: Some(BigUint::from(store.len())),
                generators,
                factors: None,
                store: OnceLock::new(),
            }),
        };
        let _ = g.inner.store.set(store);
        g
    }

    /// Attaches the closed-form order of a constructor.
    pub(crate) fn with_known_order(self, order: BigUint) -> Group {
        let inner = Arc::try_unwrap(self.inner).unwrap_or_else(|arc| GroupInner {
            degree: arc.degree,
            generators: arc.generators.clone(),
            factors: arc.factors.clone(),
            known_order: None,
            store: OnceLock::new(),
        });
        Group { inner: Arc::new(GroupInner { known_order: Some(order), ..inner }) }
    }

    /// Direct product acting on the disjoint union of the factor domains.
    /// Nested products are flattened; a single factor is returned unchanged.
    pub fn direct_product(factors: &[Group]) -> Result<Group> {
        if factors.is_empty() {
            return Err(Error::invalid("direct product needs at least one factor"));
        }
        if factors.len() == 1 {
            return Ok(factors[0].clone());
        }
        let mut flat = Vec::new();
        for f in factors {
            match f.direct_factors() {
                Some(inner) => flat.extend(inner.iter().cloned()),
                None => flat.push(f.clone()),
            }
        }
        let degree: usize = flat.iter().map(|f| f.degree()).sum();
        let mut generators = Vec::new();
        let mut offset = 0;
        let mut order = BigUint::one();
        for f in &flat {
            generators.extend(f.generators().iter().map(|g| g.shifted(offset, degree)));
            offset += f.degree();
            order *= f.order_big()?;
        }
        Ok(Group {
            inner: Arc::new(GroupInner {
                degree,
                generators,
                factors: Some(flat),
                known_order: Some(order),
                store: OnceLock::new(),
            }),
        })
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.generators
    }

    pub fn direct_factors(&self) -> Option<&[Group]> {
        self.inner.factors.as_deref()
    }

    /// First point of each direct factor's block.
    pub fn factor_offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::new();
        let mut o = 0;
        for f in self.direct_factors().unwrap_or_default() {
            offsets.push(o);
            o += f.degree();
        }
        offsets
    }

    pub fn known_order(&self) -> Option<&BigUint> {
        self.inner.known_order.as_ref()
    }

    pub fn is_materialized(&self) -> bool {
        self.inner.store.get().is_some()
    }

    pub fn store(&self) -> Result<&ElementStore> {
        self.store_with_cap(enumeration_cap())
    }

    pub fn store_with_cap(&self, cap: usize) -> Result<&ElementStore> {
        if let Some(s) = self.inner.store.get() {
            return Ok(s);
        }
        if let Some(order) = &self.inner.known_order {
            if *order > BigUint::from(cap) {
                return Err(Error::CapExceeded { cap, partial: 0 });
            }
        }
        let elements = closure(self.degree(), self.generators(), cap)?;
        let _ = self.inner.store.set(ElementStore::build(elements, self.generators()));
        Ok(self.inner.store.get().unwrap())
    }

    /// Group order. Exact for materializable groups and for direct products.
    pub fn order_big(&self) -> Result<BigUint> {
        if let Some(s) = self.inner.store.get() {
            return Ok(BigUint::from(s.len()));
        }
        if let Some(o) = &self.inner.known_order {
            return Ok(o.clone());
        }
        Ok(BigUint::from(self.store()?.len()))
    }

    pub fn order(&self) -> Result<u64> {
        self.order_big()?.to_u64().ok_or(Error::CapExceeded { cap: enumeration_cap(), partial: 0 })
    }

    pub fn elements(&self) -> Result<&[Permutation]> {
        Ok(self.store()?.elements())
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree())
    }

    /// Components of `x` in each direct factor, when `x` preserves every block.
    pub fn project(&self, x: &Permutation) -> Option<Vec<Permutation>> {
        let factors = self.direct_factors()?;
        let mut out = Vec::with_capacity(factors.len());
        let mut o = 0;
        for f in factors {
            out.push(x.restrict(o, f.degree())?);
            o += f.degree();
        }
        Some(out)
    }

    pub fn contains(&self, x: &Permutation) -> Result<bool> {
        if x.degree() != self.degree() {
            return Ok(false);
        }
        if !self.is_materialized() {
            if let Some(parts) = self.project(x) {
                for (f, part) in self.direct_factors().unwrap().iter().zip(parts) {
                    if !f.contains(&part)? {
                        return Ok(false);
                    }
                }
                return Ok(true);
            } else if self.direct_factors().is_some() {
                return Ok(false);
            }
        }
        Ok(self.store()?.id_of(x).is_some())
    }

    /// The conjugacy class of `x`, by orbit enumeration under the generators.
    /// Never materializes the group.
    pub fn conjugacy_class(&self, x: &Permutation, cap: usize) -> Result<Vec<Permutation>> {
        if x.degree() != self.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: x.degree() });
        }
        let inverses: Vec<Permutation> = self.generators().iter().map(|g| g.inverse()).collect();
        let mut seen = HashSet::new();
        seen.insert(x.clone());
        let mut out = vec![x.clone()];
        let mut head = 0;
        while head < out.len() {
            let y = out[head].clone();
            head += 1;
            for (g, gi) in self.generators().iter().zip(&inverses) {
                let z = gi.then(&y).then(g);
                if !seen.contains(&z) {
                    if out.len() >= cap {
                        return Err(Error::CapExceeded { cap, partial: out.len() });
                    }
                    seen.insert(z.clone());
                    out.push(z);
                }
            }
        }
        Ok(out)
    }

    pub fn class_index_by_orbit(&self, x: &Permutation, cap: usize) -> Result<u64> {
        Ok(self.conjugacy_class(x, cap)?.len() as u64)
    }

    /// `|G| / |C_G(x)|`, scanning the materialized group.
    pub fn class_index_by_centraliser(&self, x: &Permutation) -> Result<u64> {
        let store = self.store()?;
        let id = store.id_of(x).ok_or_else(|| Error::invalid(format!("{x} is not in the group")))?;
        let c = store.centraliser_of(&[id]).count();
        Ok((store.len() / c) as u64)
    }

    /// `i_G(x) = |G : C_G(x)|`, the size of the class of `x`.
    ///
    /// Direct products are handled factor by factor. Otherwise the class
    /// table of the materialized group is used, falling back to an orbit
    /// enumeration when the group is too large to materialize.
    pub fn class_index(&self, x: &Permutation) -> Result<u64> {
        if let Some(factors) = self.direct_factors() {
            if !self.is_materialized() {
                let parts = self
                    .project(x)
                    .ok_or_else(|| Error::invalid(format!("{x} does not preserve the factor blocks")))?;
                let mut index = 1u64;
                for (f, part) in factors.iter().zip(&parts) {
                    index *= f.class_index(part)?;
                }
                return Ok(index);
            }
        }
        match self.store() {
            Ok(store) => {
                let id = store.id_of(x).ok_or_else(|| Error::invalid(format!("{x} is not in the group")))?;
                Ok(store.classes().index_of(id))
            }
            Err(e) if e.is_cap() => self.class_index_by_orbit(x, DEFAULT_CLASS_CAP),
            Err(e) => Err(e),
        }
    }

    /// `C_G(S)`. Direct products are handled factor by factor, since an
    /// element centralises `S` exactly when each component centralises the
    /// projection of `S`.
    pub fn centraliser(&self, s: &[Permutation]) -> Result<Subgroup> {
        if let Some(factors) = self.direct_factors() {
            if !self.is_materialized() && self.store().is_err() {
                let mut parts: Vec<Vec<Permutation>> = vec![Vec::new(); factors.len()];
                for x in s {
                    let comps = self
                        .project(x)
                        .ok_or_else(|| Error::invalid(format!("{x} does not preserve the factor blocks")))?;
                    for (k, c) in comps.into_iter().enumerate() {
                        parts[k].push(c);
                    }
                }
                let mut cents = Vec::new();
                for (f, part) in factors.iter().zip(&parts) {
                    cents.push(f.centraliser(part)?.as_group()?);
                }
                let product = Group::direct_product(&cents)?;
                return Ok(Subgroup::embedded(self.clone(), product));
            }
        }
        let store = self.store()?;
        let mut ids = Vec::with_capacity(s.len());
        for x in s {
            ids.push(store.id_of(x).ok_or_else(|| Error::invalid(format!("{x} is not in the group")))?);
        }
        Ok(Subgroup::from_set(self.clone(), store.centraliser_of(&ids)))
    }

    pub fn whole(&self) -> Result<Subgroup> {
        Ok(Subgroup::from_set(self.clone(), self.store()?.full_set()))
    }

    pub fn trivial_subgroup(&self) -> Result<Subgroup> {
        let store = self.store()?;
        Ok(Subgroup::from_set(self.clone(), ElementSet::from_ids(store.len(), [0])))
    }

    /// Subgroup generated by the given elements of this group.
    pub fn subgroup_generated(&self, elements: &[Permutation]) -> Result<Subgroup> {
        match self.store() {
            Ok(store) => {
                let mut ids = Vec::new();
                for x in elements {
                    ids.push(store.id_of(x).ok_or_else(|| Error::invalid(format!("{x} is not in the group")))?);
                }
                Ok(Subgroup::from_set_with_gens(self.clone(), store.generate(&ids), ids))
            }
            Err(e) if e.is_cap() => {
                let sub = Group::from_generators(self.degree(), elements.to_vec())?;
                sub.store()?;
                Ok(Subgroup::embedded(self.clone(), sub))
            }
            Err(e) => Err(e),
        }
    }

    /// The subgroup formed by the listed direct factors, in place.
    pub fn direct_factor_subgroup(&self, indices: &[usize]) -> Result<Subgroup> {
        let factors = self.direct_factors().ok_or_else(|| Error::invalid("not a direct product"))?;
        let offsets = self.factor_offsets();
        let mut gens = Vec::new();
        for &i in indices {
            let f = factors
                .get(i)
                .ok_or_else(|| Error::invalid(format!("no direct factor {i}; there are {}", factors.len())))?;
            gens.extend(f.generators().iter().map(|x| x.shifted(offsets[i], self.degree())));
        }
        self.subgroup_generated(&gens)
    }

    pub fn same_group(&self, other: &Group) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }
}
