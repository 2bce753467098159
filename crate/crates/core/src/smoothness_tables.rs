// @generated by scripts/gen_smoothness.py; do not edit by hand.

use crate::stencil::SmoothnessForm;

/// Cells -1..=1 relative to cell i.
pub(crate) const CANDIDATE_0: SmoothnessForm<2> = SmoothnessForm {
    weights: [4.0 / 3.0, 13.0 / 16.0],
    rows: [
        [1.0, -5.0 / 8.0],
        [0.0, 1.0],
    ],
};

/// Cells 0..=2 relative to cell i.
pub(crate) const CANDIDATE_1: SmoothnessForm<2> = SmoothnessForm {
    weights: [10.0 / 3.0, 13.0 / 40.0],
    rows: [
        [1.0, -11.0 / 20.0],
        [0.0, 1.0],
    ],
};

/// Cells -2..=0 relative to cell i.
pub(crate) const CANDIDATE_2: SmoothnessForm<2> = SmoothnessForm {
    weights: [4.0 / 3.0, 13.0 / 16.0],
    rows: [
        [1.0, -11.0 / 8.0],
        [0.0, 1.0],
    ],
};

/// Cells 0..=3 relative to cell i.
pub(crate) const CANDIDATE_3: SmoothnessForm<3> = SmoothnessForm {
    weights: [2107.0 / 240.0, 13549.0 / 6321.0, 10153.0 / 162588.0],
    rows: [
        [1.0, -2594.0 / 2107.0, 927.0 / 2107.0],
        [0.0, 1.0, -13313.0 / 27098.0],
        [0.0, 0.0, 1.0],
    ],
};

/// Cells -3..=0 relative to cell i.
pub(crate) const CANDIDATE_4: SmoothnessForm<3> = SmoothnessForm {
    weights: [547.0 / 240.0, 1063.0 / 1641.0, 10153.0 / 12756.0],
    rows: [
        [1.0, -1394.0 / 547.0, 927.0 / 547.0],
        [0.0, 1.0, -3167.0 / 2126.0],
        [0.0, 0.0, 1.0],
    ],
};

/// Cells 0..=4 relative to cell i.
pub(crate) const CANDIDATE_5: SmoothnessForm<4> = SmoothnessForm {
    weights: [53959.0 / 2520.0, 59355309.0 / 6906752.0, 8921987368.0 / 13354944525.0, 1110161041.0 / 107063848416.0],
    rows: [
        [1.0, -433665.0 / 215836.0, 162579.0 / 107918.0, -86329.0 / 215836.0],
        [0.0, 1.0, -945305518.0 / 890329635.0, 290071763.0 / 890329635.0],
        [0.0, 0.0, 1.0, -8384962321.0 / 17843974736.0],
        [0.0, 0.0, 0.0, 1.0],
    ],
};

/// Cells -2..=3 relative to cell i.
pub(crate) const FULL_6: SmoothnessForm<5> = SmoothnessForm {
    weights: [90593.0 / 40320.0, 13266742327.0 / 3652709760.0, 2535830006332177.0 / 601779431952720.0, 39239865303035603.0 / 38037450094982655.0, 30589925355209401.0 / 784797306060712060.0],
    rows: [
        [1.0, -306207.0 / 90593.0, 1124555.0 / 271779.0, -606571.0 / 271779.0, 122810.0 / 271779.0],
        [0.0, 1.0, -74779183825.0 / 39800226981.0, 49345301363.0 / 39800226981.0, -11287126279.0 / 39800226981.0],
        [0.0, 0.0, 1.0, -2191308206103902.0 / 2535830006332177.0, 569087044063309.0 / 2535830006332177.0],
        [0.0, 0.0, 0.0, 1.0, -30151741810665499.0 / 78479730606071206.0],
        [0.0, 0.0, 0.0, 0.0, 1.0],
    ],
};

/// Cells -3..=4 relative to cell i.
pub(crate) const FULL_8: SmoothnessForm<7> = SmoothnessForm {
    weights: [46388292547.0 / 20756736000.0, 488471065414065247519.0 / 133320398107686451200.0, 444956185127408800533717361.0 / 78833700096712235871292800.0, 29423655525041875461939174923985139.0 / 3993584991353443543631837137402752.0, 2206358987759643608637679820082956831249.0 / 741476119231055261640867208084425502800.0, 12141539757850549227999725223155550932831.0 / 46333538742952515781391276221742093456229.0, 2083289868408878562255948310319356765873.0 / 339963113219815378383992306248355426119268.0],
    rows: [
        [1.0, -760759377191.0 / 139164877641.0, 33287419730.0 / 2728723091.0, -1985504465170.0 / 139164877641.0, 1291035808745.0 / 139164877641.0, -148180843597.0 / 46388292547.0, 63540330136.0 / 139164877641.0],
        [0.0, 1.0, -36641917633858003989.0 / 9216435196491797123.0, 3029966893307989549682.0 / 488471065414065247519.0, -2356091544665512905454.0 / 488471065414065247519.0, 918633378327755753295.0 / 488471065414065247519.0, -144079432687385683865.0 / 488471065414065247519.0],
        [0.0, 0.0, 1.0, -7611116101367462760600938107.0 / 3114693295891861603736021527.0, 7303063500584756063206575579.0 / 3114693295891861603736021527.0, -3220673639370525026514882145.0 / 3114693295891861603736021527.0, 546817648067169138362467306.0 / 3114693295891861603736021527.0],
        [0.0, 0.0, 0.0, 1.0, -194059460037256490905011374467168473.0 / 147118277625209377309695874619925695.0, 19989066599753081741778810510976593.0 / 29423655525041875461939174923985139.0, -18625964221049823871248760964664923.0 / 147118277625209377309695874619925695.0],
        [0.0, 0.0, 0.0, 0.0, 1.0, -1706978302788765372105545645188659565990.0 / 2206358987759643608637679820082956831249.0, 384978566804034703098235098675801124469.0 / 2206358987759643608637679820082956831249.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 1.0, -9074191493639196384127023026036288499355.0 / 24283079515701098455999450446311101865662.0],
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0],
    ],
};
