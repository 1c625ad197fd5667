//! End-to-end group theory checks on the built-in presentation data.

use coverforge_core::data;
use coverforge_core::fpgroup::quotient::{is_abelian, is_normal, perm_order};
use coverforge_core::fpgroup::{
    enumerate_cosets, parse_presentation_file, subgroup_abelian_invariants,
    EnumeratorOptions, FiniteQuotient,
};
use num_bigint::BigInt;

fn ambient() -> coverforge_core::fpgroup::PresentationFile {
    parse_presentation_file(data::AMBIENT_PRESENTATION).unwrap()
}

fn table_of(sub: &str) -> coverforge_core::fpgroup::CosetTable {
    let file = ambient();
    enumerate_cosets(
        &file.presentation,
        &file.subgroups[sub],
        &EnumeratorOptions::default(),
    )
    .unwrap()
}

#[test]
fn subgroup_indices() {
    assert_eq!(table_of("gx").index(), data::INDEX_GX);
    assert_eq!(table_of("gy").index(), data::INDEX_GY);
    assert_eq!(table_of("gz").index(), data::INDEX_GZ);
}

#[test]
fn quotient_structure() {
    let file = ambient();
    let table = table_of("gz");
    let quotient = FiniteQuotient::from_coset_table(&table).unwrap();
    assert_eq!(quotient.order(1000).unwrap(), data::QUOTIENT_ORDER);

    // the distinguished generator words realize the target presentation
    let target = parse_presentation_file(data::QUOTIENT_294_PRESENTATION)
        .unwrap()
        .presentation;
    let images: Vec<_> = data::T_WORDS
        .iter()
        .map(|w| {
            quotient
                .word_permutation(&file.presentation.parse_word(w).unwrap())
                .unwrap()
        })
        .collect();
    assert!(coverforge_core::fpgroup::quotient::verify_quotient_presentation(
        &quotient,
        &target,
        &images,
        data::QUOTIENT_ORDER,
        1000,
    )
    .unwrap());

    // element orders of the distinguished generators
    assert_eq!(perm_order(&images[0]), 2);
    assert_eq!(perm_order(&images[1]), 7);
    assert_eq!(perm_order(&images[2]), 7);
    assert_eq!(perm_order(&images[3]), 3);

    // <t1,t3> has order 14 and is abelian (the first intermediate quotient)
    let t13 = vec![images[0].clone(), images[2].clone()];
    let c14 = coverforge_core::fpgroup::quotient::closure(&t13, quotient.degree, 1000).unwrap();
    assert_eq!(c14.len(), 14);
    assert!(is_abelian(&t13));
    assert!(!is_normal(&quotient.gen_images, &t13, quotient.degree, 1000).unwrap());

    // <t1,t2> has order 14, is nonabelian (dihedral) and normal
    let t12 = vec![images[0].clone(), images[1].clone()];
    let d14 = coverforge_core::fpgroup::quotient::closure(&t12, quotient.degree, 1000).unwrap();
    assert_eq!(d14.len(), 14);
    assert!(!is_abelian(&t12));
    assert!(is_normal(&quotient.gen_images, &t12, quotient.degree, 1000).unwrap());

    // <t2> has order 7 and is normal (the intermediate degree-7 cover)
    let t2 = vec![images[1].clone()];
    assert!(is_normal(&quotient.gen_images, &t2, quotient.degree, 1000).unwrap());
    // and t2 lies inside <t1,t2>
    assert!(d14.contains(&images[1]));
}

#[test]
fn gx_abelianization_is_z14() {
    let file = ambient();
    let table = table_of("gx");
    let inv = subgroup_abelian_invariants(&file.presentation, &table).unwrap();
    assert_eq!(inv.free_rank, 0);
    assert_eq!(inv.torsion, vec![BigInt::from(14)]);
}

#[test]
fn gz_abelianization() {
    let file = ambient();
    let table = table_of("gz");
    let inv = subgroup_abelian_invariants(&file.presentation, &table).unwrap();
    // regression fixture: both the sparse hybrid and the plain
    // arbitrary-precision Smith normal form paths produce (Z/2)^6
    assert_eq!(inv.free_rank, 0);
    assert_eq!(inv.torsion, vec![BigInt::from(2); 6]);
}
