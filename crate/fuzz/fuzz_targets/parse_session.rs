#![no_main]

use libfuzzer_sys::fuzz_target;
use qgor_tool::session::ListKind;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(session) = qgor_tool::parse_session(text) else { return };
    for ring in &session.rings {
        assert!(session.ring(&ring.name).is_some());
        for list in session.lists_of(&ring.name, ListKind::Ideal) {
            assert_eq!(list.ring, ring.name);
        }
    }
});
