#![no_main]

use hypersub::geometry::{containing_translates, RationalPoint};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(point) = RationalPoint::parse(text) else {
        return;
    };

    // The display form must reparse to the same point.
    let reparsed = RationalPoint::parse(&point.to_string()).expect("display form parses");
    assert_eq!(reparsed, point);

    // The profile exists exactly when the coordinate sum is integral, and
    // then its fractional total obeys the documented bounds.
    if let Ok(profile) = point.frac_profile() {
        if !profile.support.is_empty() {
            assert!(1 <= profile.frac_sum);
            assert!(profile.frac_sum <= profile.support.len() - 1);
        }
        // The containing-translate family is 2^k in the number of integral
        // coordinates, so only expand it for small ambient dimensions.
        if point.ambient_dim() <= 8 {
            let family = containing_translates(&point).expect("integral sum");
            assert!(!family.is_empty());
            for cell in family {
                assert_eq!(cell.contains(&point), Ok(true));
                assert_eq!(cell.contains_by_criterion(&point), Ok(true));
            }
        }
    }
});
