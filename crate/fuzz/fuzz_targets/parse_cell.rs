#![no_main]

use hypersub::geometry::Cell;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(cell) = Cell::from_json_str(text) else {
        return;
    };

    // Encode/decode must be the identity on accepted cells.
    let reencoded = cell.to_json_string();
    let reparsed = Cell::from_json_str(&reencoded).expect("own encoding parses");
    assert_eq!(reparsed, cell);

    // Level and dimension invariants hold for anything that parses.
    assert!(cell.level() >= 1);
    assert!(cell.level() <= cell.ambient_dim());

    // Facet enumeration is linear in the dimension; exercise it when small.
    if cell.ambient_dim() <= 6 {
        let d = cell.ambient_dim();
        let expected = if cell.level() == 1 || cell.level() == d {
            d + 1
        } else {
            2 * (d + 1)
        };
        let facets = cell.facets();
        assert_eq!(facets.len(), expected);
        assert!(facets.iter().all(|f| f.dim() == Some(d - 1)));
    }
});
