"""Values at infinite argument for all convergent nested sums of weight <= 6.

Generated by scripts/build_constants.py; do not edit by hand.  Entries map
an index vector to the exponent-keyed polynomial over the symbolic constant
basis (see kernel.SYMBOLS).  u6 marks the single weight-6 value outside the
shipped basis (numerically -0.504095397...); expressions in which it survives cannot
be evaluated numerically."""

from fractions import Fraction as F

S6_NUMERIC = "0.9874414264032997137716500080418202141360271489142684572751590515456136991187889535586"

SYMBOL_NUMERICS = {
    "ln2": "0.6931471805599453094172321214581765680755001343602552541206800094933936219696947156059",
    "z2": "1.644934066848226436472415166646025189218949901206798437735558229370007470403200873834",
    "z3": "1.202056903159594285399738161511449990764986292340498881792271555341838205786313090186",
    "z5": "1.036927755143369926331365486457034168057080919501912811974192677903803589786281484560",
    "li4half": "0.5174790616738993863307581618988629456223774751413792582443193479770082815818649769365",
    "li5half": "0.5084005792422687074591088492585899413195411256648216487244977963526253942287802426194",
    "s6": "0.9874414264032997137716500080418202141360271489142684572751590515456136991187889535586",
}

INFINITY_TABLE = {
    (-1,): {(0, 1, 0, 0, 0, 0, 0, 0, 0): F(-1, 1)},
    (-2,): {(0, 0, 1, 0, 0, 0, 0, 0, 0): F(-1, 2)},
    (2,): {(0, 0, 1, 0, 0, 0, 0, 0, 0): F(1, 1)},
    (-1, -1): {(0, 0, 1, 0, 0, 0, 0, 0, 0): F(1, 2), (0, 2, 0, 0, 0, 0, 0, 0, 0): F(1, 2)},
    (-1, 1): {(0, 0, 1, 0, 0, 0, 0, 0, 0): F(-1, 2), (0, 2, 0, 0, 0, 0, 0, 0, 0): F(1, 2)},
    (-3,): {(0, 0, 0, 1, 0, 0, 0, 0, 0): F(-3, 4)},
    (3,): {(0, 0, 0, 1, 0, 0, 0, 0, 0): F(1, 1)},
    (-2, -1): {(0, 0, 0, 1, 0, 0, 0, 0, 0): F(-5, 8), (0, 1, 1, 0, 0, 0, 0, 0, 0): F(3, 2)},
    (-2, 1): {(0, 0, 0, 1, 0, 0, 0, 0, 0): F(-5, 8)},
    (-1, -2): {(0, 0, 0, 1, 0, 0, 0, 0, 0): F(13, 8), (0, 1, 1, 0, 0, 0, 0, 0, 0): F(-1, 1)},
    (-1, 2): {(0, 0, 0, 1, 0, 0, 0, 0, 0): F(-1, 1), (0, 1, 1, 0, 0, 0, 0, 0, 0): F(1, 2)},
    (2, -1): {(0, 0, 0, 1, 0, 0, 0, 0, 0): F(1, 4), (0, 1, 1, 0, 0, 0, 0, 0, 0): F(-3, 2)},
    (2, 1): {(0, 0, 0, 1, 0, 0, 0, 0, 0): F(2, 1)},
    (-1, -1, -1): {(0, 0, 0, 1, 0, 0, 0, 0, 0): F(-1, 4), (0, 1, 1, 0, 0, 0, 0, 0, 0): F(-1, 2), (0, 3, 0, 0, 0, 0, 0, 0, 0): F(-1, 6)},
    (-1, -1, 1): {(0, 0, 0, 1, 0, 0, 0, 0, 0): F(7, 4), (0, 1, 1, 0, 0, 0, 0, 0, 0): F(-1, 2), (0, 3, 0, 0, 0, 0, 0, 0, 0): F(-1, 6)},
    (-1, 1, -1): {(0, 0, 0, 1, 0, 0, 0, 0, 0): F(1, 8), (0, 1, 1, 0, 0, 0, 0, 0, 0): F(1, 2), (0, 3, 0, 0, 0, 0, 0, 0, 0): F(-1, 6)},
    (-1, 1, 1): {(0, 0, 0, 1, 0, 0, 0, 0, 0): F(-7, 8), (0, 1, 1, 0, 0, 0, 0, 0, 0): F(1, 2), (0, 3, 0, 0, 0, 0, 0, 0, 0): F(-1, 6)},
    (-4,): {(0, 0, 2, 0, 0, 0, 0, 0, 0): F(-7, 20)},
    (4,): {(0, 0, 2, 0, 0, 0, 0, 0, 0): F(2, 5)},
    (-3, -1): {(0, 0, 0, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 0, 2, 0, 0, 0, 0, 0, 0): F(3, 5), (0, 2, 1, 0, 0, 0, 0, 0, 0): F(1, 2), (0, 4, 0, 0, 0, 0, 0, 0, 0): F(-1, 12)},
    (-3, 1): {(0, 0, 0, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 2, 0, 0, 0, 0, 0, 0): F(-11, 10), (0, 1, 0, 1, 0, 0, 0, 0, 0): F(7, 4), (0, 2, 1, 0, 0, 0, 0, 0, 0): F(-1, 2), (0, 4, 0, 0, 0, 0, 0, 0, 0): F(1, 12)},
    (-2, -2): {(0, 0, 2, 0, 0, 0, 0, 0, 0): F(13, 40)},
    (-2, 2): {(0, 0, 0, 0, 0, 1, 0, 0, 0): F(-4, 1), (0, 0, 2, 0, 0, 0, 0, 0, 0): F(51, 40), (0, 1, 0, 1, 0, 0, 0, 0, 0): F(-7, 2), (0, 2, 1, 0, 0, 0, 0, 0, 0): F(1, 1), (0, 4, 0, 0, 0, 0, 0, 0, 0): F(-1, 6)},
    (-1, -3): {(0, 0, 0, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 2, 0, 0, 0, 0, 0, 0): F(-1, 5), (0, 1, 0, 1, 0, 0, 0, 0, 0): F(3, 4), (0, 2, 1, 0, 0, 0, 0, 0, 0): F(-1, 2), (0, 4, 0, 0, 0, 0, 0, 0, 0): F(1, 12)},
    (-1, 3): {(0, 0, 2, 0, 0, 0, 0, 0, 0): F(-19, 40), (0, 1, 0, 1, 0, 0, 0, 0, 0): F(3, 4)},
    (2, -2): {(0, 0, 0, 0, 0, 1, 0, 0, 0): F(4, 1), (0, 0, 2, 0, 0, 0, 0, 0, 0): F(-17, 8), (0, 1, 0, 1, 0, 0, 0, 0, 0): F(7, 2), (0, 2, 1, 0, 0, 0, 0, 0, 0): F(-1, 1), (0, 4, 0, 0, 0, 0, 0, 0, 0): F(1, 6)},
    (2, 2): {(0, 0, 2, 0, 0, 0, 0, 0, 0): F(7, 10)},
    (3, -1): {(0, 0, 2, 0, 0, 0, 0, 0, 0): F(1, 8), (0, 1, 0, 1, 0, 0, 0, 0, 0): F(-7, 4)},
    (3, 1): {(0, 0, 2, 0, 0, 0, 0, 0, 0): F(1, 2)},
    (-2, -1, -1): {(0, 0, 0, 0, 0, 1, 0, 0, 0): F(-4, 1), (0, 0, 2, 0, 0, 0, 0, 0, 0): F(7, 5), (0, 1, 0, 1, 0, 0, 0, 0, 0): F(-21, 8), (0, 2, 1, 0, 0, 0, 0, 0, 0): F(-1, 2), (0, 4, 0, 0, 0, 0, 0, 0, 0): F(-1, 6)},
    (-2, -1, 1): {(0, 0, 0, 0, 0, 1, 0, 0, 0): F(-3, 1), (0, 0, 2, 0, 0, 0, 0, 0, 0): F(39, 40), (0, 4, 0, 0, 0, 0, 0, 0, 0): F(-1, 8)},
    (-2, 1, -1): {(0, 0, 2, 0, 0, 0, 0, 0, 0): F(3, 40), (0, 2, 1, 0, 0, 0, 0, 0, 0): F(3, 4)},
    (-2, 1, 1): {(0, 0, 0, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 0, 2, 0, 0, 0, 0, 0, 0): F(1, 8), (0, 1, 0, 1, 0, 0, 0, 0, 0): F(-7, 8), (0, 2, 1, 0, 0, 0, 0, 0, 0): F(1, 4), (0, 4, 0, 0, 0, 0, 0, 0, 0): F(-1, 24)},
    (-1, -2, -1): {(0, 0, 0, 0, 0, 1, 0, 0, 0): F(4, 1), (0, 0, 2, 0, 0, 0, 0, 0, 0): F(-7, 5), (0, 1, 0, 1, 0, 0, 0, 0, 0): F(5, 8), (0, 2, 1, 0, 0, 0, 0, 0, 0): F(1, 2), (0, 4, 0, 0, 0, 0, 0, 0, 0): F(1, 6)},
    (-1, -2, 1): {(0, 0, 0, 0, 0, 1, 0, 0, 0): F(3, 1), (0, 0, 2, 0, 0, 0, 0, 0, 0): F(-9, 40), (0, 1, 0, 1, 0, 0, 0, 0, 0): F(5, 8), (0, 2, 1, 0, 0, 0, 0, 0, 0): F(-3, 4), (0, 4, 0, 0, 0, 0, 0, 0, 0): F(1, 8)},
    (-1, -1, -2): {(0, 0, 2, 0, 0, 0, 0, 0, 0): F(-3, 5), (0, 1, 0, 1, 0, 0, 0, 0, 0): F(1, 1), (0, 2, 1, 0, 0, 0, 0, 0, 0): F(-1, 4)},
    (-1, -1, 2): {(0, 0, 0, 0, 0, 1, 0, 0, 0): F(3, 1), (0, 0, 2, 0, 0, 0, 0, 0, 0): F(-3, 8), (0, 1, 0, 1, 0, 0, 0, 0, 0): F(1, 1), (0, 2, 1, 0, 0, 0, 0, 0, 0): F(-1, 4), (0, 4, 0, 0, 0, 0, 0, 0, 0): F(1, 8)},
    (-1, 1, -2): {(0, 0, 0, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 2, 0, 0, 0, 0, 0, 0): F(-1, 5), (0, 1, 0, 1, 0, 0, 0, 0, 0): F(1, 8), (0, 4, 0, 0, 0, 0, 0, 0, 0): F(1, 12)},
    (-1, 1, 2): {(0, 0, 0, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 0, 2, 0, 0, 0, 0, 0, 0): F(-1, 20), (0, 1, 0, 1, 0, 0, 0, 0, 0): F(1, 8), (0, 4, 0, 0, 0, 0, 0, 0, 0): F(-1, 24)},
    (-1, 2, -1): {(0, 0, 0, 0, 0, 1, 0, 0, 0): F(-4, 1), (0, 0, 2, 0, 0, 0, 0, 0, 0): F(5, 4), (0, 1, 0, 1, 0, 0, 0, 0, 0): F(-1, 4), (0, 2, 1, 0, 0, 0, 0, 0, 0): F(-1, 2), (0, 4, 0, 0, 0, 0, 0, 0, 0): F(-1, 6)},
    (-1, 2, 1): {(0, 0, 0, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 0, 2, 0, 0, 0, 0, 0, 0): F(-1, 40), (0, 1, 0, 1, 0, 0, 0, 0, 0): F(-1, 4), (0, 2, 1, 0, 0, 0, 0, 0, 0): F(1, 4), (0, 4, 0, 0, 0, 0, 0, 0, 0): F(-1, 24)},
    (2, -1, -1): {(0, 0, 0, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 0, 2, 0, 0, 0, 0, 0, 0): F(1, 40), (0, 2, 1, 0, 0, 0, 0, 0, 0): F(5, 4), (0, 4, 0, 0, 0, 0, 0, 0, 0): F(1, 24)},
    (2, -1, 1): {(0, 0, 0, 0, 0, 1, 0, 0, 0): F(4, 1), (0, 0, 2, 0, 0, 0, 0, 0, 0): F(-2, 1), (0, 1, 0, 1, 0, 0, 0, 0, 0): F(21, 8), (0, 2, 1, 0, 0, 0, 0, 0, 0): F(-1, 4), (0, 4, 0, 0, 0, 0, 0, 0, 0): F(1, 6)},
    (2, 1, -1): {(0, 0, 0, 0, 0, 1, 0, 0, 0): F(3, 1), (0, 0, 2, 0, 0, 0, 0, 0, 0): F(-6, 5), (0, 1, 0, 1, 0, 0, 0, 0, 0): F(7, 8), (0, 2, 1, 0, 0, 0, 0, 0, 0): F(-3, 2), (0, 4, 0, 0, 0, 0, 0, 0, 0): F(1, 8)},
    (2, 1, 1): {(0, 0, 2, 0, 0, 0, 0, 0, 0): F(6, 5)},
    (-1, -1, -1, -1): {(0, 0, 2, 0, 0, 0, 0, 0, 0): F(9, 40), (0, 1, 0, 1, 0, 0, 0, 0, 0): F(1, 4), (0, 2, 1, 0, 0, 0, 0, 0, 0): F(1, 4), (0, 4, 0, 0, 0, 0, 0, 0, 0): F(1, 24)},
    (-1, -1, -1, 1): {(0, 0, 2, 0, 0, 0, 0, 0, 0): F(-19, 40), (0, 1, 0, 1, 0, 0, 0, 0, 0): F(1, 4), (0, 2, 1, 0, 0, 0, 0, 0, 0): F(1, 4), (0, 4, 0, 0, 0, 0, 0, 0, 0): F(1, 24)},
    (-1, -1, 1, -1): {(0, 0, 0, 0, 0, 1, 0, 0, 0): F(3, 1), (0, 0, 2, 0, 0, 0, 0, 0, 0): F(-6, 5), (0, 1, 0, 1, 0, 0, 0, 0, 0): F(7, 8), (0, 2, 1, 0, 0, 0, 0, 0, 0): F(-1, 2), (0, 4, 0, 0, 0, 0, 0, 0, 0): F(1, 6)},
    (-1, -1, 1, 1): {(0, 0, 0, 0, 0, 1, 0, 0, 0): F(3, 1), (0, 1, 0, 1, 0, 0, 0, 0, 0): F(7, 8), (0, 2, 1, 0, 0, 0, 0, 0, 0): F(-1, 2), (0, 4, 0, 0, 0, 0, 0, 0, 0): F(1, 6)},
    (-1, 1, -1, -1): {(0, 0, 2, 0, 0, 0, 0, 0, 0): F(-1, 8), (0, 1, 0, 1, 0, 0, 0, 0, 0): F(-1, 8), (0, 2, 1, 0, 0, 0, 0, 0, 0): F(-1, 4), (0, 4, 0, 0, 0, 0, 0, 0, 0): F(1, 24)},
    (-1, 1, -1, 1): {(0, 0, 2, 0, 0, 0, 0, 0, 0): F(3, 8), (0, 1, 0, 1, 0, 0, 0, 0, 0): F(-1, 8), (0, 2, 1, 0, 0, 0, 0, 0, 0): F(-1, 4), (0, 4, 0, 0, 0, 0, 0, 0, 0): F(1, 24)},
    (-1, 1, 1, -1): {(0, 0, 0, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 0, 2, 0, 0, 0, 0, 0, 0): F(2, 5)},
    (-1, 1, 1, 1): {(0, 0, 0, 0, 0, 1, 0, 0, 0): F(-1, 1)},
    (-5,): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(-15, 16)},
    (5,): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(1, 1)},
    (-4, -1): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(-59, 32), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(3, 4), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(3, 4)},
    (-4, 1): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(-59, 32), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(1, 2)},
    (-3, -2): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(83, 16), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-9, 4)},
    (-3, 2): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(11, 32), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-5, 8)},
    (-2, -3): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(-67, 16), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(21, 8)},
    (-2, 3): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(21, 32), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-3, 4)},
    (-1, -4): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(91, 32), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-3, 4), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-2, 5)},
    (-1, 4): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(-2, 1), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(3, 8), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(7, 20)},
    (2, -3): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(-41, 32), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-1, 8)},
    (2, 3): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(11, 2), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-2, 1)},
    (3, -2): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(-51, 32), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(1, 4)},
    (3, 2): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(-9, 2), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(3, 1)},
    (4, -1): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(17, 16), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-3, 8), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-3, 4)},
    (4, 1): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(3, 1), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-1, 1)},
    (-3, -1, -1): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(15, 32), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-1, 2), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-19, 40), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-1, 2), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(1, 12)},
    (-3, -1, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-2, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(85, 16), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-13, 8), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-1, 10), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-1, 6), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(1, 60)},
    (-3, 1, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-39, 16), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-3, 4), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(17, 10), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-7, 8), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(1, 3), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 30)},
    (-3, 1, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-2, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(15, 32), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(3, 8), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-7, 8), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(1, 3), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 15)},
    (-2, -2, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(8, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-123, 16), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(4, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(19, 20), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-1, 3), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(1, 10)},
    (-2, -2, 1): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(-29, 32), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(15, 16)},
    (-2, -1, -2): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-16, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(547, 32), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-13, 16), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(-8, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-17, 5), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(2, 3), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 5)},
    (-2, -1, 2): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(-363, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(25, 8), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(3, 8)},
    (-2, 1, -2): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(5, 8), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(1, 16)},
    (-2, 1, 2): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(-53, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(1, 16)},
    (-2, 2, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(33, 32), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(11, 8), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-19, 20), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(7, 4), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-1, 3), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(1, 30)},
    (-2, 2, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-89, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-7, 4), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(4, 1), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(7, 4), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-2, 3), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(2, 15)},
    (-1, -3, -1): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(15, 32), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-2, 5), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(1, 2), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 12)},
    (-1, -3, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-2, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(85, 16), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-7, 8), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-1, 2), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-7, 8), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(1, 3), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 15)},
    (-1, -2, -2): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(8, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-331, 32), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(5, 16), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(4, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(17, 8), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-1, 3), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(1, 10)},
    (-1, -2, 2): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-259, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(9, 8), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(4, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-7, 10), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(7, 4), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-2, 3), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(2, 15)},
    (-1, -1, -3): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(-15, 8), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(1, 8), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(19, 40), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-3, 8)},
    (-1, -1, 3): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(2, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(159, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-11, 8), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(1, 5), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-3, 8), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(1, 6), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 60)},
    (-1, 1, -3): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-153, 32), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(9, 8), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(1, 5), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(1, 2), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-1, 6), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(1, 20)},
    (-1, 1, 3): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(2, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-151, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-7, 16), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(19, 40), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(1, 2), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-1, 3), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(1, 15)},
    (-1, 2, -2): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(129, 16), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-3, 2), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(-4, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-13, 40), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-7, 4), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(2, 3), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-2, 15)},
    (-1, 2, 2): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-8, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(227, 32), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-1, 8), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(-4, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-51, 40), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(1, 3), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 10)},
    (-1, 3, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(27, 8), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-13, 40), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-1, 3), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(1, 30)},
    (-1, 3, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(2, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-311, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(7, 8), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(11, 10), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-7, 8), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(1, 6), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 60)},
    (2, -2, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-89, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-7, 4), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(113, 40), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-7, 4), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(1, 3), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 30)},
    (2, -2, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(33, 32), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(13, 16), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(-4, 1), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-7, 4), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(2, 3), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-2, 15)},
    (2, -1, -2): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(257, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-1, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-3, 8)},
    (2, -1, 2): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(16, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-507, 32), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-1, 1), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(8, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(17, 5), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-2, 3), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(1, 5)},
    (2, 1, -2): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(-177, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(5, 16)},
    (2, 1, 2): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(9, 2), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-1, 1)},
    (2, 2, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-8, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(125, 16), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(3, 8), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(-4, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-113, 40), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(1, 3), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 10)},
    (2, 2, 1): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(2, 1)},
    (3, -1, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(2, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-311, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(15, 8), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(19, 40), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(7, 8), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(1, 6), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 60)},
    (3, -1, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(27, 8), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-1, 16), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-49, 40), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(7, 8), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(1, 6), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 20)},
    (3, 1, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(2, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-125, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-1, 16), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-3, 8), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-1, 3), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(1, 15)},
    (3, 1, 1): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(-1, 2), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(1, 1)},
    (-2, -1, -1, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-5, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(101, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(27, 16), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-11, 8), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(21, 16), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(7, 12), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(1, 24)},
    (-2, -1, -1, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-11, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(845, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-21, 16), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(-3, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-17, 5), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(21, 16), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(7, 12), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 30)},
    (-2, -1, 1, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-7, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(221, 32), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-87, 40), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-1, 3), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(1, 60)},
    (-2, -1, 1, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-3, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-23, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(21, 16), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(9, 40), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(1, 40)},
    (-2, 1, -1, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(7, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-457, 64), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(3, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(53, 40), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-11, 12), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(1, 15)},
    (-2, 1, -1, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(3, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-29, 16), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-3, 16), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(9, 10), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-1, 4), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 40)},
    (-2, 1, 1, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-1, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(1, 8), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-1, 20), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(1, 6), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(1, 120)},
    (-2, 1, 1, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(1, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-27, 32), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-7, 16), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-1, 6), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(1, 30)},
    (-1, -2, -1, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(13, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-911, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(21, 16), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(4, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(21, 8), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(21, 16), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-17, 12), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(7, 120)},
    (-1, -2, -1, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(13, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-911, 64), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(4, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(27, 8), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-2, 3), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(7, 120)},
    (-1, -2, 1, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(3, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-99, 32), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(1, 40), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(3, 4), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(1, 60)},
    (-1, -2, 1, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(1, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(81, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-6, 5), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-1, 6), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(1, 30)},
    (-1, -1, -2, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-11, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(845, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-13, 8), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(-4, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-41, 40), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-13, 8), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(5, 6), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-3, 40)},
    (-1, -1, -2, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-5, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(101, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(1, 1), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(-4, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(1, 40), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-13, 8), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(7, 12), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 8)},
    (-1, -1, -1, -2): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(3, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(29, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-3, 4), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(3, 8), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-1, 2), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(1, 12), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 40)},
    (-1, -1, -1, 2): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(-1, 1), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-3, 8), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(3, 5), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-1, 2), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(1, 12)},
    (-1, -1, 1, -2): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(1, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-125, 32), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(3, 8), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(3, 5), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-1, 16), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-1, 12), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(1, 30)},
    (-1, -1, 1, 2): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(29, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-15, 16), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(3, 8), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-1, 16), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-1, 12), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(1, 120)},
    (-1, -1, 2, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(8, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-61, 8), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(1, 8), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(47, 40), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(1, 8), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-1, 3), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 40)},
    (-1, -1, 2, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-29, 16), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(1, 8), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(9, 40), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(1, 8), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(1, 12), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(1, 120)},
    (-1, 1, -2, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(7, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-457, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(5, 16), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(31, 20), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-5, 16), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-1, 6), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-7, 120)},
    (-1, 1, -2, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(3, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-29, 16), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(5, 16), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(9, 40), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-5, 16), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(1, 4), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 40)},
    (-1, 1, -1, -2): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(1, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-33, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-7, 8), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(1, 20), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(13, 16), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-1, 3), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(3, 40)},
    (-1, 1, -1, 2): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-405, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(31, 16), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(1, 5), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(13, 16), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-1, 3), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(1, 20)},
    (-1, 1, 1, -2): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(1, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(15, 16), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-3, 8), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(1, 5), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-1, 2), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(1, 6), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 20)},
    (-1, 1, 1, 2): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-2, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-1, 32), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(1, 2), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(1, 20), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-1, 2), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(1, 6), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 40)},
    (-1, 1, 2, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(35, 32), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(19, 16), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(3, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-7, 5), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(23, 16), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-1, 3), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(19, 120)},
    (-1, 1, 2, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(2, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-23, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-23, 16), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(3, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(1, 40), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(23, 16), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-7, 12), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(13, 120)},
    (-1, 2, -1, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-16, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(245, 16), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(-4, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-81, 20), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(7, 6), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 30)},
    (-1, 2, -1, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-14, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(521, 32), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-21, 16), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(-4, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-49, 20), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-21, 16), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(7, 12), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 20)},
    (-1, 2, 1, -1): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(87, 32), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-21, 16), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(-3, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(6, 5), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-21, 16), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 8)},
    (-1, 2, 1, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(81, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(7, 8), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(-3, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-1, 8), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-7, 8), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(5, 12), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-11, 120)},
    (2, -1, -1, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(8, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-61, 8), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-3, 8), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(3, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(11, 8), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-13, 12), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(7, 120)},
    (2, -1, -1, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-29, 16), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(19, 20), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-5, 12), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 30)},
    (2, -1, 1, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-85, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-21, 16), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(83, 40), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-21, 16), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(1, 3), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 30)},
    (2, -1, 1, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(6, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-61, 8), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(17, 8), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-21, 16), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 120)},
    (2, 1, -1, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(2, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-23, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-7, 16), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(49, 40), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-7, 16), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(11, 12), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 60)},
    (2, 1, -1, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(35, 32), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(5, 8), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(-3, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-4, 5), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-7, 16), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(11, 12), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-11, 120)},
    (2, 1, 1, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(4, 1), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-12, 5), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-1, 3), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 120)},
    (2, 1, 1, 1): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(4, 1)},
    (-1, -1, -1, -1, -1): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(-3, 16), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-1, 8), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-9, 40), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-1, 8), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-1, 12), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 120)},
    (-1, -1, -1, -1, 1): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(29, 16), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-1, 8), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-9, 40), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-1, 8), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-1, 12), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 120)},
    (-1, -1, -1, 1, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-3, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(375, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-23, 16), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(-3, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(19, 40), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-23, 16), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(5, 12), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-13, 120)},
    (-1, -1, -1, 1, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-3, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(23, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(9, 16), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(-3, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(19, 40), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-23, 16), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(5, 12), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-13, 120)},
    (-1, -1, 1, -1, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(3, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-81, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-7, 16), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(6, 5), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-7, 16), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(1, 6), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 30)},
    (-1, -1, 1, -1, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(3, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-369, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(9, 16), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(6, 5), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-7, 16), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(1, 6), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 30)},
    (-1, -1, 1, 1, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-4, 1), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(1, 1)},
    (-1, -1, 1, 1, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(1, 1)},
    (-1, 1, -1, -1, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(3, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-369, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(13, 8), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(3, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(1, 8), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(11, 8), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-5, 12), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(11, 120)},
    (-1, 1, -1, -1, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(3, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(-81, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-11, 8), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(3, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(1, 8), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(11, 8), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(-5, 12), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(11, 120)},
    (-1, 1, -1, 1, -1): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(3, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-1, 16), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-3, 8), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(1, 16), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(1, 12), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 120)},
    (-1, 1, -1, 1, 1): {(0, 0, 0, 0, 1, 0, 0, 0, 0): F(-29, 64), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(15, 16), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-3, 8), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(1, 16), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(1, 12), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 120)},
    (-1, 1, 1, -1, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-2, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(27, 32), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-2, 5), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-7, 16), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(1, 6), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 30)},
    (-1, 1, 1, -1, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-2, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(123, 32), (0, 0, 1, 1, 0, 0, 0, 0, 0): F(-9, 16), (0, 1, 0, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 1, 2, 0, 0, 0, 0, 0, 0): F(-2, 5), (0, 2, 0, 1, 0, 0, 0, 0, 0): F(-7, 16), (0, 3, 1, 0, 0, 0, 0, 0, 0): F(1, 6), (0, 5, 0, 0, 0, 0, 0, 0, 0): F(-1, 30)},
    (-1, 1, 1, 1, -1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-1, 1), (0, 0, 0, 0, 1, 0, 0, 0, 0): F(1, 1)},
    (-1, 1, 1, 1, 1): {(0, 0, 0, 0, 0, 0, 1, 0, 0): F(-1, 1)},
    (-6,): {(0, 0, 3, 0, 0, 0, 0, 0, 0): F(-31, 140)},
    (6,): {(0, 0, 3, 0, 0, 0, 0, 0, 0): F(8, 35)},
    (-5, -1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(1, 1)},
    (-5, 1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-1, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(3, 4), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-11, 20), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(31, 16)},
    (-4, -2): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(-3, 4), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(193, 420)},
    (-4, 2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(4, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-9, 4), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(743, 840), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-31, 4)},
    (-3, -3): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(9, 32), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(4, 35)},
    (-3, 3): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-6, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(81, 32), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-439, 280), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(93, 8)},
    (-2, -4): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(3, 4), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-47, 840)},
    (-2, 4): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(4, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-33, 16), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(143, 168), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-31, 4)},
    (-1, -5): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(8, 35), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(15, 16)},
    (-1, 5): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(9, 32), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-111, 280), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(15, 16)},
    (2, -4): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-4, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(9, 4), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-1223, 840), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(31, 4)},
    (2, 4): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(-1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(74, 105)},
    (3, -3): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(6, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-105, 32), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(377, 280), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-93, 8)},
    (3, 3): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(4, 35)},
    (4, -2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-4, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(33, 16), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-1069, 840), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(31, 4)},
    (4, 2): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-8, 105)},
    (5, -1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(-9, 32), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(7, 40), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-31, 16)},
    (5, 1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(-1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(2, 5)},
    (-4, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(4, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-57, 32), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(1381, 1680), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-155, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-9, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-3, 4)},
    (-4, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(5, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-1, 1), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-59, 420), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-7, 8), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 12)},
    (-4, 1, -1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(3, 8), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(115, 168), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(7, 8), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 12)},
    (-4, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(3, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-5, 8), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(113, 840), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-93, 32)},
    (-3, -2, -1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-5, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(51, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-403, 240), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(155, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(27, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 2), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 12)},
    (-3, -2, 1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(-109, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(643, 840)},
    (-3, -1, -2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-6, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(9, 4), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-591, 560), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(155, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 4), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 24)},
    (-3, -1, 2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-5, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(11, 4), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-6, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(327, 280), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(3, 2), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 4)},
    (-3, 1, -2): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(-21, 16), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-9, 56), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(7, 4), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 2), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 12)},
    (-3, 1, 2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-1, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(5, 4), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-83, 280), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(31, 16), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-7, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 4), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 24)},
    (-3, 2, -1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(5, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-99, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(4, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-11, 12), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(15, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 1), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 6)},
    (-3, 2, 1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-7, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(59, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-683, 840), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(217, 32)},
    (-2, -3, -1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(5, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-51, 32), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(25, 24), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-155, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-27, 8)},
    (-2, -3, 1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(179, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-3, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(193, 420), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-21, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(3, 4), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 8)},
    (-2, -2, -2): {(0, 0, 3, 0, 0, 0, 0, 0, 0): F(-109, 560)},
    (-2, -2, 2): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(-35, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(6, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-1003, 560), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(21, 4), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-3, 2), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 4)},
    (-2, -1, -3): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(4, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-15, 8), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(559, 336), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-155, 16), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-9, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 2), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 12)},
    (-2, -1, 3): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(5, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-53, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(4, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-1279, 1680), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-9, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 1), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 6)},
    (-2, 1, -3): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(-3, 8), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(3, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-37, 42), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(21, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-3, 4), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 8)},
    (-2, 1, 3): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-1, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(7, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-493, 1680), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(31, 16)},
    (-2, 2, -2): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(63, 16), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-10, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(45, 16), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-35, 4), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(5, 2), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-5, 12)},
    (-2, 2, 2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(4, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-13, 4), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(37, 80), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-31, 4), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(7, 4), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 2), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 12)},
    (-2, 3, -1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-5, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(15, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-127, 336), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(27, 8)},
    (-2, 3, 1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(3, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-23, 32), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(23, 120), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-93, 32)},
    (-1, -4, -1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-4, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(33, 32), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-491, 840), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(59, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(3, 4)},
    (-1, -4, 1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-5, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-5, 8), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(53, 168), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(59, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(1, 1)},
    (-1, -3, -2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(1, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(3, 4), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-89, 840), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-11, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-9, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 4), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 24)},
    (-1, -3, 2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(5, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(5, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-179, 840), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-11, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-5, 4), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 2), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 12)},
    (-1, -2, -3): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(1, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-15, 8), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-853, 1680), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-21, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(15, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 2), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 12)},
    (-1, -2, 3): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-5, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(59, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-4, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(503, 420), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-21, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 1), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 6)},
    (-1, -1, -4): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(3, 4), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-71, 112), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(2, 1), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-3, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-7, 40)},
    (-1, -1, 4): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-5, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-11, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(17, 70), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(2, 1), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(3, 4), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 5)},
    (-1, 1, -4): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-1, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(9, 8), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(22, 35), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-29, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(7, 10), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 12)},
    (-1, 1, 4): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(3, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-65, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-59, 280), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-29, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-17, 40), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 24)},
    (-1, 2, -3): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(3, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-69, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(4, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-337, 420), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(41, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(7, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 1), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 6)},
    (-1, 2, 3): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-1, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(41, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(17, 1680), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(41, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 2), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 12)},
    (-1, 3, -2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-7, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-33, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(121, 840), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(51, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(9, 4)},
    (-1, 3, 2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-1, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-1, 4), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-493, 1680), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(51, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(5, 8)},
    (-1, 4, -1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(4, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-21, 32), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(47, 105), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-17, 16), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-15, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-3, 4)},
    (-1, 4, 1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(3, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(11, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-179, 840), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-17, 16), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-1, 2)},
    (2, -3, -1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(7, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-59, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(389, 840), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-15, 8)},
    (2, -3, 1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-5, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(71, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(3, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-253, 120), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(155, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(21, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-3, 4), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 8)},
    (2, -2, -2): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(-91, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(4, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-41, 140), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(7, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 1), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 6)},
    (2, -2, 2): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(35, 16), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-8, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(73, 35), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-7, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(2, 1), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 3)},
    (2, -1, -3): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-5, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(41, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-4, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(139, 120), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(9, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 1), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 6)},
    (2, -1, 3): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-4, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(57, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-1811, 840), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(155, 16), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(9, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 2), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 12)},
    (2, 1, -3): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(1, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-17, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-3, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(769, 840), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-31, 16), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-21, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(3, 4), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 8)},
    (2, 1, 3): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(17, 42)},
    (2, 2, -2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-4, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(17, 16), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(6, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-1943, 560), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(31, 4), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(21, 4), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-3, 2), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 4)},
    (2, 2, 2): {(0, 0, 3, 0, 0, 0, 0, 0, 0): F(31, 70)},
    (2, 3, -1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-5, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(55, 32), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-295, 336), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(93, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(15, 8)},
    (2, 3, 1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(-3, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(29, 21)},
    (3, -2, -1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-3, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(23, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-4, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(13, 12), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-3, 4), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 1), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 6)},
    (3, -2, 1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(5, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-85, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(677, 1680), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-155, 32)},
    (3, -1, -2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(5, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-29, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(4, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-183, 280), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-7, 4), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 1), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 6)},
    (3, -1, 2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(6, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-4, 1), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(27, 35), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-155, 16), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(7, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 2), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 12)},
    (3, 1, -2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(1, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-31, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-27, 560), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-31, 16)},
    (3, 1, 2): {(0, 0, 3, 0, 0, 0, 0, 0, 0): F(11, 35)},
    (3, 2, -1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(5, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-41, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(589, 336), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-217, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-9, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 2), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 12)},
    (3, 2, 1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(3, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-143, 210)},
    (4, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-3, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(53, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-11, 42), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(9, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(3, 4)},
    (4, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-4, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(15, 8), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-607, 840), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(155, 32), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(5, 8), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 24)},
    (4, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-5, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(49, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-149, 168), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(93, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-5, 8), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 24)},
    (4, 1, 1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(-1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(89, 210)},
    (-3, -1, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(2, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-11, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(15, 16), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(503, 1680), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(3, 2), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(29, 40), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 4), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-2, 45)},
    (-3, -1, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-6, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-3, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-1, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-1151, 840), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(2, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(279, 64), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 4), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(13, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 20)},
    (-3, -1, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(6, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-31, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(173, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-209, 336), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-2, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(31, 4), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(39, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-31, 80), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 120)},
    (-3, -1, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(2, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-3, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(17, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-3, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(83, 60), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(4, 5), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 360)},
    (-3, 1, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-2, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(1, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(9, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-121, 168), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-2, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(155, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(11, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-97, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-3, 16), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(7, 360)},
    (-3, 1, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-6, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(4, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-193, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-137, 210), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(7, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-7, 5), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 120)},
    (-3, 1, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(6, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-3, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(9, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(337, 840), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(5, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(7, 20), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 30)},
    (-3, 1, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-2, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-1, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(41, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-85, 168), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(2, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(31, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-7, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 4), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 6), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 36)},
    (-2, -2, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-12, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(9, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-173, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(4, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-813, 280), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(39, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-39, 20), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(5, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 15)},
    (-2, -2, -1, 1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(-25, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-233, 280), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(403, 64), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-39, 40), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 4), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 20)},
    (-2, -2, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(12, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-9, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(113, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(61, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(31, 16), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-15, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(19, 40), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 60)},
    (-2, -2, 1, 1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(45, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-55, 112), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(21, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-3, 8), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 16)},
    (-2, -1, -2, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(24, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-13, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(649, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(239, 70), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-15, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(4, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(171, 40), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-7, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(2, 15)},
    (-2, -1, -2, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-24, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(13, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-599, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-4, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-46, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(16, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-1457, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-15, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(4, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 1), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 3), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 15)},
    (-2, -1, -1, -2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(5, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(73, 128), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(7, 24), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-33, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-3, 8)},
    (-2, -1, -1, 2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(48, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-21, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(55, 8), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(5687, 840), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-16, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(31, 4), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-3, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(17, 5), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 3), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 15)},
    (-2, -1, 1, -2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(24, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-23, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(557, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(761, 210), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-8, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(155, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-3, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(83, 40), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-11, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 30)},
    (-2, -1, 1, 2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(21, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-247, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(9, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-613, 840), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-3, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-21, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(3, 16)},
    (-2, -1, 2, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-48, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(30, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-11, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-162, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(16, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-1271, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-57, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-151, 40), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 3), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 15)},
    (-2, -1, 2, 1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(3, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(127, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-117, 112), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(3, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-3, 8), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 16)},
    (-2, 1, -2, -1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(25, 128), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-93, 64)},
    (-2, 1, -2, 1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(25, 128), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(9, 80)},
    (-2, 1, -1, -2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-24, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(21, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-569, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-769, 210), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(8, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-155, 64), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-39, 20), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(5, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 30)},
    (-2, 1, -1, 2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-13, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(91, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-241, 336), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(63, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 24)},
    (-2, 1, 1, -2): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(131, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-5, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(17, 21), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-35, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(5, 8), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-5, 48)},
    (-2, 1, 1, 2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(5, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-17, 16), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(13, 60), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-155, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 8), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 48)},
    (-2, 1, 2, -1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(3, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-151, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(9, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-771, 560), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(63, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-9, 8), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(3, 16)},
    (-2, 1, 2, 1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-15, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(65, 128), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-75, 112), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(465, 64)},
    (-2, 2, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(16, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-4, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(33, 32), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(20, 7), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-31, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-11, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(19, 20), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 90)},
    (-2, 2, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(4, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-1, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(513, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-6, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(109, 56), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-91, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(79, 40), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 12), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 6), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 180)},
    (-2, 2, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-8, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(5, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(83, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-13, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(51, 80), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-41, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(23, 20), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 12), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 16), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-13, 180)},
    (-2, 2, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(4, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(9, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-7, 4), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(411, 560), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-279, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(7, 4), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 2), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 12), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 3), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 18)},
    (-1, -3, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-6, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(17, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-25, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-509, 560), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-15, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-1, 1), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-9, 20), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 3), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 20)},
    (-1, -3, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(6, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-17, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(77, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(27, 35), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-15, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-13, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(149, 80), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-11, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(3, 40)},
    (-1, -3, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-2, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-5, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(5, 8), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-4, 5), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(2, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-15, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(15, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(19, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 8), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 72)},
    (-1, -3, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-2, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(1, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-29, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-29, 280), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(2, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-15, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-1, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 4), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 36)},
    (-1, -2, -2, -1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(25, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-4, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(183, 140), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-8, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(123, 16), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-15, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-4, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-73, 40), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 6), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 10)},
    (-1, -2, -2, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(12, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-9, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(17, 16), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(45, 56), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-8, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(123, 16), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(15, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 2), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 6), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 30)},
    (-1, -2, -1, -2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-24, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(13, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-455, 128), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-13, 5), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(16, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-547, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-13, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(4, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(3, 8), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 6), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 15)},
    (-1, -2, -1, 2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-48, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(26, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-95, 8), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-421, 70), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(16, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-547, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(37, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-39, 10), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(5, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 15)},
    (-1, -2, 1, -2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(1, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-61, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-279, 560), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(53, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(1, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 8), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 48)},
    (-1, -2, 1, 2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-11, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(119, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(261, 560), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(53, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(1, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 4), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 24)},
    (-1, -2, 2, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(16, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-8, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(45, 16), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(76, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(89, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-19, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(113, 40), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 90)},
    (-1, -2, 2, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(4, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-7, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(99, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(589, 560), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(89, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-7, 4), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 2), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 12), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 6), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 18)},
    (-1, -1, -3, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(6, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(3, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(1, 32), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(2113, 1680), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-15, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 40), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 8), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 120)},
    (-1, -1, -3, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-2, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(11, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-1, 2), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-403, 336), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-15, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(7, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-21, 20), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 360)},
    (-1, -1, -2, -2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(12, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-19, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(59, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(281, 240), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-8, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(331, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(13, 4), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-27, 80), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 6), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 30)},
    (-1, -1, -2, 2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(16, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-9, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(73, 16), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-4, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(4307, 1680), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-8, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(331, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-27, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(131, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-7, 180)},
    (-1, -1, -1, -3): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-2, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-9, 4), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-123, 560), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(15, 8), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(11, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 10), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(1, 8), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 360)},
    (-1, -1, -1, 3): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(11, 16), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-71, 112), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(15, 8), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-1, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-19, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(1, 8)},
    (-1, -1, 1, -3): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(2, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-1, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-25, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(8, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-2, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(151, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-9, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-9, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-1, 6), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(5, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 36)},
    (-1, -1, 1, 3): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-5, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(163, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(201, 280), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-2, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(151, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-3, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(2, 5), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-1, 6), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 40)},
    (-1, -1, 2, -2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-16, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(9, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-49, 16), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(5, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-1381, 420), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(8, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-227, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(15, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-27, 16), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 12), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 16), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(7, 180)},
    (-1, -1, 2, 2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-12, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(23, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-125, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-491, 336), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(8, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-227, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-1, 4), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 10), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 30)},
    (-1, -1, 3, -1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-5, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(7, 4), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-295, 336), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-2, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(311, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(27, 80), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 6), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 60)},
    (-1, -1, 3, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(4, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-21, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-9, 16), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(1801, 1680), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-2, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(311, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(7, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 4), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 90)},
    (-1, 1, -3, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(2, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-1, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-9, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(41, 210), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(39, 16), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-11, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(7, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 90)},
    (-1, 1, -3, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(6, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-4, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(179, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-3, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(673, 420), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(39, 16), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-7, 4), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 1), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 60)},
    (-1, 1, -2, -2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-12, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(7, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-37, 16), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-178, 105), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-103, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-5, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-17, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 60)},
    (-1, 1, -2, 2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-8, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(15, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-217, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(4, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-3571, 1680), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-103, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(19, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-13, 20), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 12), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 3), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 45)},
    (-1, 1, -1, -3): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-6, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(17, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-5, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-51, 112), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-47, 8), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-19, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(1, 8), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 60)},
    (-1, 1, -1, 3): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-8, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(11, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-93, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-2, 5), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-47, 8), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-2, 1), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(3, 20), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(1, 8), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 8), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(7, 360)},
    (-1, 1, 1, -3): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-6, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(3, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-3, 2), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(3, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-53, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(2, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-33, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-17, 20), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-1, 6), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 6), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 120)},
    (-1, 1, 1, 3): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-4, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(7, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-19, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-87, 140), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(2, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-33, 32), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-9, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-1, 6), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 16), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 90)},
    (-1, 1, 2, -2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(8, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-19, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(499, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-7, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(2641, 840), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(73, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-37, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(153, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 12), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-11, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 45)},
    (-1, 1, 2, 2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(12, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-17, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(5, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(611, 420), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(73, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(23, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(21, 80), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 60)},
    (-1, 1, 3, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(8, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-4, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(211, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(251, 210), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-2, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(125, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(11, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(11, 40), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(5, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-13, 360)},
    (-1, 1, 3, 1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(3, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-67, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-43, 120), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-2, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(125, 64), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-4, 5), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 8), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 40)},
    (-1, 2, -2, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-16, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(4, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-33, 32), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-20, 7), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-33, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(11, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-19, 20), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 90)},
    (-1, 2, -2, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-4, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(1, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-303, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-153, 280), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-33, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(13, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 2), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 12), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 6), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 18)},
    (-1, 2, -1, -2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(48, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-26, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(41, 4), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(1643, 280), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-16, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(507, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(39, 10), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-5, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 15)},
    (-1, 2, -1, 2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(24, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-23, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(77, 16), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(213, 70), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-16, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(507, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-1, 2), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-4, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-3, 8), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 6), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 15)},
    (-1, 2, 1, -2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-7, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-181, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(3, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-69, 112), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(177, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(41, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-3, 4), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 8)},
    (-1, 2, 1, 2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-1, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(7, 4), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-9, 28), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(177, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-11, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(3, 8), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 16)},
    (-1, 2, 2, -1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(4, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-61, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(4, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-97, 140), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(8, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-125, 16), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(3, 4), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(4, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 20), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 6), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 10)},
    (-1, 2, 2, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-12, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(19, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-119, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-661, 560), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(8, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-125, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 2), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 6), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 30)},
    (-1, 3, -1, -1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(-1, 2), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-27, 8), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 5), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 3), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 30)},
    (-1, 3, -1, 1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(-169, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(11, 80), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-27, 8), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(13, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-23, 80), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 8), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 120)},
    (-1, 3, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-8, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(9, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-217, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-247, 560), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-2, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(125, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-1, 1), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-21, 16), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 8), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 72)},
    (-1, 3, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(4, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-5, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(47, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(23, 80), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-2, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(125, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-3, 8), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 90)},
    (2, -2, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-16, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(8, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-69, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-6, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-1, 14), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-403, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-25, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-53, 40), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 12), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 4), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 90)},
    (2, -2, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-4, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(7, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-99, 32), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(101, 280), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(7, 4), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-113, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 12), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 180)},
    (2, -2, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(8, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-5, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(7, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(67, 70), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-13, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(73, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 12), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 4), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(13, 180)},
    (2, -2, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-4, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(1, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(137, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-7, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-69, 560), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-31, 16), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-49, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(7, 8), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 12), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-19, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 18)},
    (2, -1, -2, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(48, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-30, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(347, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(6, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(177, 70), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-16, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(1457, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(39, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(91, 40), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 15)},
    (2, -1, -2, 1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-3, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-137, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(303, 280), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(15, 16)},
    (2, -1, -1, -2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-48, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(21, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-8, 1), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-2533, 336), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(16, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-31, 4), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-151, 40), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(19, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 15)},
    (2, -1, -1, 2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-5, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(7, 4), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-3, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(59, 84), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(9, 8), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 8)},
    (2, -1, 1, -2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-7, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-191, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(1, 105), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(45, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-5, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 12)},
    (2, -1, 1, 2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-24, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(9, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-133, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-5, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-5777, 1680), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(8, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-155, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-9, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-43, 40), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 16), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 30)},
    (2, -1, 2, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-24, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(23, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-137, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-4, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-47, 28), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-3, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-4, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-111, 40), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 3), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-2, 15)},
    (2, -1, 2, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(24, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-23, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(139, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(5, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(919, 560), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-16, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(1271, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-3, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-4, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-5, 8), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(13, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 15)},
    (2, 1, -2, -1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(15, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-225, 128), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(75, 112), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-21, 16)},
    (2, 1, -2, 1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-3, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-9, 128), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-15, 28), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(93, 64)},
    (2, 1, -1, -2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-1, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(129, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-47, 420), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(7, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-7, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 24)},
    (2, 1, -1, 2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(24, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-8, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(177, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-7, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(7837, 1680), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-8, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(155, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-35, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(103, 40), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-5, 16), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 30)},
    (2, 1, 1, -2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-5, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(45, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-26, 15), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(155, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(21, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-3, 8), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 16)},
    (2, 1, 1, 2): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(-1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(118, 105)},
    (2, 1, 2, -1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(15, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-9, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(9, 5), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-465, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-21, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(9, 8), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-3, 16)},
    (2, 1, 2, 1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(2, 1)},
    (2, 2, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(12, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-19, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(119, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(661, 560), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-3, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(93, 40), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 6), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 15)},
    (2, 2, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-4, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(5, 4), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(4, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-1453, 560), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(31, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(63, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(33, 80), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 20)},
    (2, 2, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-12, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(3, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-41, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(9, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-149, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(279, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(69, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-203, 80), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(13, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 60)},
    (2, 2, 1, 1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(-2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(8, 7)},
    (3, -1, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(5, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-35, 16), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(937, 840), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-2, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-279, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-19, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-19, 40), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 6), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 60)},
    (3, -1, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-4, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(21, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(9, 16), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(3, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-317, 210), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-7, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-83, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 180)},
    (3, -1, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(8, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-3, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(223, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(2363, 1680), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-25, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(137, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 8), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(11, 360)},
    (3, -1, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(5, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-251, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(677, 1680), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(2, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-31, 4), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(7, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(39, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 16), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 40)},
    (3, 1, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-3, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(67, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(67, 120), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(3, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(37, 40), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 6), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 24)},
    (3, 1, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-8, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(4, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-183, 128), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-205, 168), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(2, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-155, 64), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-17, 40), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 4), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-17, 360)},
    (3, 1, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(4, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-1, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(7, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(107, 105), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-2, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-31, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-5, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 90)},
    (3, 1, 1, 1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(2, 105)},
    (-2, -1, -1, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(16, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-4, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(41, 32), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(20, 7), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-3, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-93, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-33, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(11, 8), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-5, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 360)},
    (-2, -1, -1, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(9, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-7, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(105, 32), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(447, 560), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-27, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(93, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 4), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 80)},
    (-2, -1, -1, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(15, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-15, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(243, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-3, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(1501, 560), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-21, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(279, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-3, 8), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 24)},
    (-2, -1, -1, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(18, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-7, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(147, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(261, 80), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-1, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-465, 64), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(251, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-19, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(11, 240)},
    (-2, -1, 1, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(9, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-15, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(45, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(143, 140), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(63, 40), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(13, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 120)},
    (-2, -1, 1, -1, 1): {(0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(129, 560), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(3, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-93, 16), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(3, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(13, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(11, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 240)},
    (-2, -1, 1, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-2, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(19, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-107, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(18, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(1, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-155, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-21, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-21, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 180)},
    (-2, -1, 1, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(3, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(9, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(1, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-2, 35), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-39, 80), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 16), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 240)},
    (-2, 1, -1, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-12, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(9, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-321, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(3, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-92, 35), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(69, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-21, 10), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(11, 16), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-11, 240)},
    (-2, 1, -1, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-21, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(33, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-501, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-491, 140), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(3, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(279, 64), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-219, 80), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(5, 8), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-7, 120)},
    (-2, 1, -1, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-11, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(17, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-211, 128), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-8, 5), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(1, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(31, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(3, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-123, 80), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 144)},
    (-2, 1, -1, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-6, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(3, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-57, 128), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-247, 280), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-27, 80), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 16), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 120)},
    (-2, 1, 1, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(11, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-13, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(177, 128), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(481, 280), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-3, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-31, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-7, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(11, 16), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-13, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(7, 720)},
    (-2, 1, 1, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(4, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-1, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(181, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(293, 280), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-31, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(17, 20), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 6), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 180)},
    (-2, 1, 1, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-2, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(1, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-17, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-6, 35), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 10), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 8), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-13, 720)},
    (-2, 1, 1, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(1, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-49, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-1, 1), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 8), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 72)},
    (-1, -2, -1, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-48, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(26, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-333, 32), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-186, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(11, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-845, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-15, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-161, 40), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(11, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 40)},
    (-1, -2, -1, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-42, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(47, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-417, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-3019, 560), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(11, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-845, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-21, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-271, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(23, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(7, 240)},
    (-1, -2, -1, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-24, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(13, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-39, 8), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-107, 40), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(7, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-221, 32), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-17, 8), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 40)},
    (-1, -2, -1, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-30, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(31, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-891, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-2141, 560), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(7, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-221, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(21, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-47, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(17, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-3, 80)},
    (-1, -2, 1, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(15, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-37, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(111, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(97, 40), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-7, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(457, 64), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(19, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-29, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-11, 240)},
    (-1, -2, 1, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(21, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-10, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(501, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(2, 1), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-7, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(457, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-3, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(39, 20), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 2), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 120)},
    (-1, -2, 1, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(7, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-19, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(107, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(22, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-1, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(27, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-7, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(29, 16), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(5, 16), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 720)},
    (-1, -2, 1, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(1, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-5, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(109, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(18, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-1, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(27, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-7, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 8), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 72)},
    (-1, -1, -2, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(48, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-26, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(39, 4), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(421, 70), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-13, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(911, 64), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(29, 8), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-5, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 24)},
    (-1, -1, -2, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(42, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-47, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(417, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(1737, 280), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-13, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(911, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(21, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(47, 20), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 6), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 30)},
    (-1, -1, -2, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-3, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(3, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-165, 128), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(2, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-3, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(99, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-21, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-9, 8), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 16), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(7, 240)},
    (-1, -1, -2, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(7, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-9, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(241, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(233, 280), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-3, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(99, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-7, 4), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(5, 16), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-7, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(11, 720)},
    (-1, -1, -1, -2, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-16, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(4, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-9, 8), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-249, 70), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(5, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-101, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(2, 1), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-39, 40), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(13, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(23, 360)},
    (-1, -1, -1, -2, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-9, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(7, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-25, 8), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-65, 56), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(5, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-101, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(13, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-49, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(13, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-3, 16), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(13, 240)},
    (-1, -1, -1, -1, -2): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(1, 4), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-57, 112), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(1, 1), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(3, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-3, 10), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(1, 6), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 48)},
    (-1, -1, -1, -1, 2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-3, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-3, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(13, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-99, 280), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(1, 1), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(3, 4), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-3, 16), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(1, 6), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 240)},
    (-1, -1, -1, 1, -2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-2, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-9, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-189, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(5, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-41, 56), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-1, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(125, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(47, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-13, 16), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(1, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(7, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-7, 720)},
    (-1, -1, -1, 1, 2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(1, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-3, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(129, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-7, 40), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-1, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(125, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-11, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 5), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(1, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 72)},
    (-1, -1, -1, 2, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(22, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-10, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(243, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(487, 140), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-8, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(61, 8), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-1, 2), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(9, 10), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-1, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-17, 360)},
    (-1, -1, -1, 2, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(13, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-19, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(117, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(163, 140), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-8, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(61, 8), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-1, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-21, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-1, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(7, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-5, 144)},
    (-1, -1, 1, -2, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(21, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-33, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(361, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(1943, 560), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-7, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(457, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-1, 1), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(31, 40), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(5, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 30)},
    (-1, -1, 1, -2, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(12, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-9, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(181, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(443, 560), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-7, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(457, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(5, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-31, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(5, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(5, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 48)},
    (-1, -1, 1, -1, -2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-3, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-1, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(115, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(1, 112), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-1, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(33, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(1, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 16), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-13, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(5, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-7, 240)},
    (-1, -1, 1, -1, 2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(7, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-91, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(31, 70), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-1, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(33, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-5, 4), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 20), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-13, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(5, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 30)},
    (-1, -1, 1, 1, -2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-3, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(2, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-3, 4), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-47, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(2, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(1, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(1, 2), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-11, 20), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(1, 6), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 120)},
    (-1, -1, 1, 1, 2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-6, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-1, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-25, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-1, 7), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(2, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(1, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(1, 2), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 16), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(1, 6), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 16), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 80)},
    (-1, -1, 1, 2, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-9, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(3, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-25, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-31, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-2, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(23, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-1, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 10), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-23, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(5, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 30)},
    (-1, -1, 1, 2, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-2, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(3, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(87, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(3, 7), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-2, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(23, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-23, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(21, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-23, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(5, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-31, 720)},
    (-1, -1, 2, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-48, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(26, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-39, 4), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(7, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-3643, 560), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(16, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-245, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(7, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-263, 80), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(17, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(19, 240)},
    (-1, -1, 2, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-42, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(20, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-459, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-3331, 560), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(16, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-245, 16), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(21, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(7, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-191, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(17, 240)},
    (-1, -1, 2, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-3, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-3, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(39, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-11, 7), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-81, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(21, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(7, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-5, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 30)},
    (-1, -1, 2, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-5, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-49, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-3, 5), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-81, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(7, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(9, 40), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(13, 360)},
    (-1, 1, -2, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-21, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(10, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-459, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-263, 80), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-3, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(99, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(21, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-263, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(31, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-7, 240)},
    (-1, 1, -2, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-15, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(37, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-111, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-197, 80), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-3, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(99, 32), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-59, 20), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(19, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-3, 80)},
    (-1, 1, -2, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-3, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(9, 32), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-103, 560), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(1, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-25, 32), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(13, 20), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-7, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 120)},
    (-1, 1, -2, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-2, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-1, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(19, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-251, 560), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(1, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-25, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(7, 20), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 180)},
    (-1, 1, -1, -2, -1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(-5, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(191, 280), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(7, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-221, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-1, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(51, 40), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(5, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 4), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 40)},
    (-1, 1, -1, -2, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-9, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(15, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-95, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-101, 140), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(7, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-221, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-5, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(39, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(5, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-3, 16), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(3, 80)},
    (-1, 1, -1, -1, -2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-9, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(29, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-35, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-187, 560), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(5, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-247, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-13, 4), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(11, 40), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(1, 6), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 6), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 30)},
    (-1, 1, -1, -1, 2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-6, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(17, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-97, 32), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-157, 560), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(5, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-247, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(7, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 40), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(1, 6), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-5, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(7, 240)},
    (-1, 1, -1, 1, -2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-5, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(5, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-129, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-139, 280), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-277, 64), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(9, 40), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(1, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(11, 720)},
    (-1, 1, -1, 1, 2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-8, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(11, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-63, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-23, 20), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-277, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-3, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-3, 5), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(1, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(7, 360)},
    (-1, 1, -1, 2, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-6, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(6, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-163, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-27, 40), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(85, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-11, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-27, 20), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-23, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(3, 8), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 24)},
    (-1, 1, -1, 2, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(1, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(1, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(75, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(61, 280), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(85, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-19, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(11, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-23, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(7, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-37, 720)},
    (-1, 1, 1, -2, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-11, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(13, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-107, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-927, 560), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(1, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-1, 8), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(1, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-29, 40), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(1, 4), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 36)},
    (-1, 1, 1, -2, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-4, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(1, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-111, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-243, 560), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(1, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-1, 8), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(1, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-19, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(1, 4), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-5, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(13, 720)},
    (-1, 1, 1, -1, -2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(6, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-5, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(85, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(81, 280), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(39, 8), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(3, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-11, 40), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-13, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(3, 16), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-3, 80)},
    (-1, 1, 1, -1, 2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(3, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-3, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(65, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-17, 70), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(39, 8), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(27, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-19, 40), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-13, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(5, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 30)},
    (-1, 1, 1, 1, -2): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-1, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(3, 8), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(3, 7), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-1, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(1, 1), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(3, 20), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(1, 6), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 120)},
    (-1, 1, 1, 1, 2): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(3, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-1, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(5, 8), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(1, 5), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-1, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(1, 1), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 40), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(1, 6), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 240)},
    (-1, 1, 1, 2, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(3, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(2, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-3, 4), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(7, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-13, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-4, 1), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(1, 1), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 10), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-1, 3), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 6), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 60)},
    (-1, 1, 1, 2, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-6, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(9, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-55, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-23, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-4, 1), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(1, 1), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(9, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-1, 3), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 16), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 240)},
    (-1, 1, 2, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(27, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-43, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(237, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(2259, 560), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-87, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-21, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(29, 8), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 3), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 60)},
    (-1, 1, 2, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(21, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-17, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(681, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-7, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(417, 112), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-87, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-21, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(233, 80), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-5, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 120)},
    (-1, 1, 2, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 1, 0): F(-15, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(45, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-9, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(1, 1), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-6, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(6, 1), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-3, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 16), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 80)},
    (-1, 1, 2, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(10, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-15, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(131, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(27, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-6, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(6, 1), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-5, 16), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(7, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-19, 720)},
    (-1, 2, -1, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(42, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-20, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(501, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(1459, 280), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-8, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(61, 8), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-3, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(161, 40), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-19, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 120)},
    (-1, 2, -1, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(48, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-26, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(39, 4), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(3293, 560), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-8, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(61, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(463, 80), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-41, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 16)},
    (-1, 2, -1, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(30, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-35, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(441, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(3, 1), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-6, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(61, 8), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(21, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(93, 40), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 8), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 120)},
    (-1, 2, -1, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(24, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-23, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(405, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(1991, 560), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-6, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(61, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(51, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-7, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 240)},
    (-1, 2, 1, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-27, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(43, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-237, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-1133, 280), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-35, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(21, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-263, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(25, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 240)},
    (-1, 2, 1, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-21, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(17, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-723, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-71, 28), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-35, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(3, 2), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-53, 20), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(7, 120)},
    (-1, 2, 1, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(1, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(11, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-73, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(2, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-4, 1), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-7, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(2, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(3, 16), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-5, 16), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(7, 144)},
    (-1, 2, 1, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-5, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(5, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-11, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-18, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-4, 1), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-7, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(3, 8), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-5, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(13, 360)},
    (2, -1, -1, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-13, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(19, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-121, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-659, 560), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(3, 4), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 1), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(13, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-2, 45)},
    (2, -1, -1, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-22, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(10, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-247, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-134, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(3, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(93, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(3, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-221, 80), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(2, 3), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-41, 720)},
    (2, -1, -1, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-12, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(3, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-39, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(9, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-149, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(1, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(465, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(63, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-43, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(5, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 120)},
    (2, -1, -1, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-7, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(3, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-137, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-6, 35), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(21, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-29, 80), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(5, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(7, 720)},
    (2, -1, 1, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(6, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-6, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(165, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-11, 80), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-3, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(93, 16), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(21, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-3, 8), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-5, 16), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 60)},
    (2, -1, 1, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-1, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-1, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-37, 16), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(113, 140), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(9, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-47, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-7, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 720)},
    (2, -1, 1, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-7, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(4, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-31, 16), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-45, 112), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-77, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 90)},
    (2, -1, 1, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-4, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(1, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(1, 2), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-559, 560), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-1, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(155, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-21, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-13, 16), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 144)},
    (2, 1, -1, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(9, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-3, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(25, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-9, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(23, 7), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-3, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-279, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-31, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(6, 5), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-11, 16), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 80)},
    (2, 1, -1, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(2, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-3, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(137, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(6, 35), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-11, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 3), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 360)},
    (2, 1, -1, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(8, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-5, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(37, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(55, 56), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-5, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(17, 16), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-13, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(37, 720)},
    (2, 1, -1, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(11, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-17, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(81, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(25, 14), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-1, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-31, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-31, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(147, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-23, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 18)},
    (2, 1, 1, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(6, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-9, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-1, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(44, 35), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(27, 16), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(13, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 80)},
    (2, 1, 1, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-3, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-2, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(3, 4), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-71, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(3, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(31, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(3, 2), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(11, 20), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(7, 24)},
    (2, 1, 1, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-5, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-8, 7), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(1, 1), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-6, 5), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 720)},
    (2, 1, 1, 1, 1): {(0, 0, 3, 0, 0, 0, 0, 0, 0): F(8, 7)},
    (-1, -1, -1, -1, -1, -1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(1, 32), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(61, 560), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(3, 16), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(1, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(9, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(1, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 720)},
    (-1, -1, -1, -1, -1, 1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(1, 32), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-187, 560), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(3, 16), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(1, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(9, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(1, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 720)},
    (-1, -1, -1, -1, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-3, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-3, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(41, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-11, 7), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(3, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-23, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(23, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-21, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(23, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-5, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(31, 720)},
    (-1, -1, -1, -1, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-3, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-3, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-87, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-3, 7), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(3, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-23, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(23, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-21, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(23, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-5, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(31, 720)},
    (-1, -1, -1, 1, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(6, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-6, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(167, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-11, 80), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-3, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(369, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(23, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-19, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(23, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-5, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(13, 720)},
    (-1, -1, -1, 1, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(6, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-6, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-25, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(2089, 1680), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-3, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(369, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(23, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-19, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(23, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-5, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(13, 720)},
    (-1, -1, -1, 1, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(7, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-9, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(23, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(143, 105), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(4, 1), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-1, 1), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-9, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(1, 3), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 16), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 240)},
    (-1, -1, -1, 1, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(7, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-9, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(55, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(23, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(4, 1), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-1, 1), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-9, 80), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(1, 3), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 16), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 240)},
    (-1, -1, 1, -1, -1, -1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(-15, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(3, 5), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-3, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(81, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-7, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-9, 40), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-13, 360)},
    (-1, -1, 1, -1, -1, 1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(49, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(3, 5), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-3, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(81, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-7, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-9, 40), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-13, 360)},
    (-1, -1, 1, -1, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-3, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(3, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-69, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-1, 56), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-3, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-9, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-3, 5), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 180)},
    (-1, -1, 1, -1, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-3, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(3, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-101, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-71, 168), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-3, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-9, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-3, 5), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 180)},
    (-1, -1, 1, 1, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-6, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(5, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-109, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-18, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(2, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-27, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 8), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 72)},
    (-1, -1, 1, 1, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-6, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(5, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-45, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-172, 105), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(2, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-27, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(7, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 8), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 72)},
    (-1, -1, 1, 1, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-5, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-8, 7), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(1, 1)},
    (-1, -1, 1, 1, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-5, 1), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(1, 1)},
    (-1, 1, -1, -1, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-6, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(6, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-169, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-3, 80), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(3, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-375, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-13, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 16), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-11, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(5, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-11, 720)},
    (-1, 1, -1, -1, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-6, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(6, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(23, 64), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-1207, 1680), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(3, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-375, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-13, 8), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-1, 16), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-11, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(5, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-11, 720)},
    (-1, 1, -1, -1, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-9, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(15, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-179, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-23, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(6, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-6, 1), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(1, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(5, 16), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-1, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-7, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(19, 720)},
    (-1, 1, -1, -1, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(-9, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(15, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-243, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-27, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(6, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-6, 1), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(1, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(5, 16), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-1, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-7, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(19, 720)},
    (-1, 1, -1, 1, -1, -1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(1, 128), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(53, 560), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-3, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(1, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(3, 16), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-1, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 720)},
    (-1, 1, -1, 1, -1, 1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(1, 128), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(-123, 560), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-3, 64), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(1, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(3, 16), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-1, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 48), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 720)},
    (-1, 1, -1, 1, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(1, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(1, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(-7, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(13, 105), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-1, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-1, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-1, 2), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 16), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-1, 6), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 16), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 80)},
    (-1, 1, -1, 1, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(1, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(1, 4), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(25, 32), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(1, 7), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-1, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-1, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-1, 2), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 16), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-1, 6), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(1, 16), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-1, 80)},
    (-1, 1, 1, -1, -1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(6, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-5, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(75, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(5, 21), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(4, 1), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(7, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-7, 40), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(5, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-13, 360)},
    (-1, 1, 1, -1, -1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(6, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-5, 2), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(11, 64), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(3, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(11, 35), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-4, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(4, 1), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(7, 8), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(-3, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(-7, 40), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(-7, 24), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(5, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(-13, 360)},
    (-1, 1, 1, -1, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(3, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-3, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(153, 128), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(1, 120), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-1, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(63, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(9, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 5), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 180)},
    (-1, 1, 1, -1, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(3, 1), (0, 0, 0, 0, 0, 0, 0, 1, 0): F(-3, 1), (0, 0, 0, 2, 0, 0, 0, 0, 0): F(89, 128), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(121, 280), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(-1, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(63, 32), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(9, 16), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 5), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 24), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 180)},
    (-1, 1, 1, 1, -1, -1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(49, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(1, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-1, 1), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-7, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 8), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 72)},
    (-1, 1, 1, 1, -1, 1): {(0, 0, 0, 2, 0, 0, 0, 0, 0): F(-15, 128), (0, 0, 1, 0, 0, 1, 0, 0, 0): F(-1, 2), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(2, 5), (0, 1, 0, 0, 0, 0, 1, 0, 0): F(1, 1), (0, 1, 0, 0, 1, 0, 0, 0, 0): F(-1, 1), (0, 1, 1, 1, 0, 0, 0, 0, 0): F(-7, 16), (0, 2, 0, 0, 0, 1, 0, 0, 0): F(1, 2), (0, 2, 2, 0, 0, 0, 0, 0, 0): F(1, 8), (0, 3, 0, 1, 0, 0, 0, 0, 0): F(7, 48), (0, 4, 1, 0, 0, 0, 0, 0, 0): F(-1, 12), (0, 6, 0, 0, 0, 0, 0, 0, 0): F(1, 72)},
    (-1, 1, 1, 1, 1, -1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(1, 1), (0, 0, 3, 0, 0, 0, 0, 0, 0): F(8, 35)},
    (-1, 1, 1, 1, 1, 1): {(0, 0, 0, 0, 0, 0, 0, 0, 1): F(1, 1)},
}
