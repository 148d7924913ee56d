"""Stored interactive-session outputs replayed by ``hbn repro``.

Each entry is ``(name, expression, render, expected)``.  ``render`` is one of

* ``term``     -- expected is term text, compared byte for byte once its
  line wrapping is joined back up,
* ``decimal``/``tsize``/``bitsize`` -- expected is a decimal string,
* ``same``     -- expected is a second expression with the same value,
* ``nsyr``/``nsyr-tsize`` -- expected is a comma-separated list of the
  first values (resp. tsizes) of the syracuse trace.
"""

SESSIONS = [
    ("mersenne-127-term", "mersenne(127)", "term", "V (W (V E [E]) []) []"),
    (
        "mersenne-127-decimal",
        "mersenne(127)",
        "decimal",
        "170141183460469231731687303715884105727",
    ),
    ("fermat-11-term", "fermat(11)", "term", "V E [E,V E [W E [V E []]]]"),
    ("fermat-11-tsize", "fermat(11)", "tsize", "8"),
    ("bitsize-2014^100", "bitsize(2014^100)", "decimal", "1097"),
    ("tsize-0", "0", "tsize", "0"),
    ("tsize-100", "100", "tsize", "6"),
    ("tsize-1000", "1000", "tsize", "8"),
    ("tsize-10000", "10000", "tsize", "10"),
    ("bitsize-0", "0", "bitsize", "0"),
    ("bitsize-100", "100", "bitsize", "6"),
    ("bitsize-1000", "1000", "bitsize", "9"),
    ("bitsize-10000", "10000", "bitsize", "13"),
    ("tsize-2^16", "2^16", "tsize", "4"),
    ("tsize-2^32", "2^32", "tsize", "5"),
    ("tsize-2^64", "2^64", "tsize", "5"),
    ("tsize-2^256", "2^256", "tsize", "5"),
    ("bestcase-5-term", "bestcase(5)", "term", "V (V (V (V E []) []) []) []"),
    ("bestcase-5-decimal", "bestcase(5)", "decimal", "65535"),
    ("bestcase-5-bitsize", "bestcase(5)", "bitsize", "16"),
    ("bestcase-5-tsize", "bestcase(5)", "tsize", "4"),
    ("worsecase-5-term", "worsecase(5)", "term", "W E [E,E,E,E,E,E,E,E,E]"),
    ("worsecase-5-decimal", "worsecase(5)", "decimal", "1364"),
    ("worsecase-5-bitsize", "worsecase(5)", "bitsize", "10"),
    ("worsecase-5-tsize", "worsecase(5)", "tsize", "10"),
    (
        "shift-start",
        "exp2(100000) - 1",
        "term",
        "V (V (W E [E]) [E,E,E,E,V E [],V (V E []) [],E]) []",
    ),
    (
        "leftshift-1000",
        "lshift(1000, exp2(100000) - 1)",
        "term",
        """W E [W (W E []) [V E [],V (V E []) []],W (W E [E])
    [V E [],E,E,V E [],V (V E []) [],E]]""",
    ),
    (
        "rightshift-roundtrip",
        "rshift(1000, lshift(1000, exp2(100000) - 1))",
        "term",
        "V (V (W E [E]) [E,E,E,E,V E [],V (V E []) [],E]) []",
    ),
    (
        "mul-ilog2-term",
        "ilog2(ilog2((exp2(exp2(12345)) - exp2(6789)) * (exp2(exp2(123)) + exp2(456789))))",
        "term",
        "V E [E,E,W E [],V E [E],E]",
    ),
    (
        "mul-ilog2-decimal",
        "ilog2(ilog2((exp2(exp2(12345)) - exp2(6789)) * (exp2(exp2(123)) + exp2(456789))))",
        "decimal",
        "12345",
    ),
    (
        "mersenne48-term",
        "mersenne48",
        "term",
        "V (W E [V E [],E,E,V (V E []) [],W E [E],E,E,V E [],V E [],W E [],E,E]) []",
    ),
    ("mersenne48-tsize", "mersenne48", "tsize", "22"),
    ("perfect48-tsize", "perfect48", "tsize", "43"),
    (
        "genFermatPrime-term",
        "genFermatPrime",
        "term",
        """V E [E,W (W E []) [W E [],E,
  V E [],E,W E [],W E [E],E,E,W E []],
  E,E,E,W (V E []) [],V E [],E,E]""",
    ),
    ("genFermatPrime-tsize", "genFermatPrime", "tsize", "30"),
    (
        "cullenPrime-term",
        "cullenPrime",
        "term",
        """V E [E,W (W E []) [W E [],E,E,E,E,V E [],E,
  V (V E []) [],E,E,V E [],E],E,V E [],E,V E [],
  E,E,E,E,V E [],E,V (V E []) [],E,E,V E [],E]""",
    ),
    ("cullenPrime-tsize", "cullenPrime", "tsize", "43"),
    (
        "woodallPrime-term",
        "woodallPrime",
        "term",
        """V (V E [V E [],E,V E [E],V (V E []) [],
 E,E,E,V E [],V E []]) [E,E,V E [E],
 V (V E []) [],E,E,E,V E [],V E []]""",
    ),
    ("woodallPrime-tsize", "woodallPrime", "tsize", "33"),
    (
        "prothPrime-term",
        "prothPrime",
        "term",
        """V E [E,V (W E []) [V E [],E,W E [],E,E,
  V E [],E,E,E,E,V E [],W E [],E],E,W E [],
  V E [],V E [],V E [],E,E,V E []]""",
    ),
    ("prothPrime-tsize", "prothPrime", "tsize", "36"),
    (
        "sophieGermainPrime-term",
        "sophieGermainPrime",
        "term",
        """V (W (V E []) [E,E,E,E,V (V E []) [],V E [],E,
   E,W E [],E,E]) [V E [],W E [],W E [],V E [],
   V E [],E,E,V E [],V E [],V E [],V (V E [])
   [],E,V E [],V (V E []) [],V E [],E,W E [],E,
   V E [],V (V E []) []]""",
    ),
    ("sophieGermainPrime-tsize", "sophieGermainPrime", "tsize", "56"),
    (
        "twinPrimes-fst-term",
        "fst(twinPrimes)",
        "term",
        """V (W E [E,V E [],E,E,V (V E []) [],
   V E [],E,E,W E [],E,E])
   [E,E,E,W E [],W (V E []) [],V E [],E,V E [],
   E,E,E,E,V E [],E,E,
   V E [],V E [],E,E,E,E,E,E,E,V E [],E,E]""",
    ),
    (
        "twinPrimes-snd-term",
        "snd(twinPrimes)",
        "term",
        """V E [E,W (V E []) [E,E,E,E,V (V E []) [],
  V E [],E,E,W E [],E,E],E,E,E,
  W E [],W (V E []) [],V E [],E,V E [],
  E,E,E,E,V E [],E,E,V E [],
  V E [],E,E,E,E,E,E,E,V E [],E,E]""",
    ),
    ("twinPrimes-fst-tsize", "fst(twinPrimes)", "tsize", "54"),
    ("twinPrimes-snd-tsize", "snd(twinPrimes)", "tsize", "56"),
    ("twinPrimes-differ-by-2", "2 + fst(twinPrimes)", "same", "snd(twinPrimes)"),
    (
        "genFermatPrime-minus-2014",
        "genFermatPrime - 2014",
        "term",
        """V (V E []) [E,V E [],E,W E [E],V E [W E [E],
  W E [],E,W E [],W E [E],E,E,W E []],V E [],
  E,W (V E []) [],V E [],E,E]""",
    ),
    (
        "bitsize-proth-minus",
        "bitsize(prothPrime - 1234567890)",
        "term",
        """W E [V E [],E,E,V (V E []) [],E,E,
  V E [],E,E,E,E,V E [],W E [],E]""",
    ),
    ("tsize-exp2-exp2-mersenne48", "tsize(exp2(exp2(mersenne48)))", "term", "V E [E,E,E]"),
    ("tsize-lshift-mersenne48", "tsize(lshift(mersenne48, mersenne48))", "term", "V E [W E [],E]"),
    ("mul-proth-cullen-ilog2", "ilog2(ilog2(prothPrime * cullenPrime))", "term", "W E [V E [],E]"),
    ("mul-proth-cullen-ilog2-decimal", "ilog2(ilog2(prothPrime * cullenPrime))", "decimal", "24"),
    (
        "nsyr-2014",
        "2014",
        "nsyr",
        "2014,755,1133,1700,1275,1913,2870,1076,807,1211,1817,2726,1022,383,575,"
        "863,1295,1943,2915,4373,6560,4920,3690,86,32,24,18,3,5,8,6,2,0",
    ),
    ("nsyr-mersenne48-tsize", "mersenne48", "nsyr-tsize", "22,22,24,26,27,28"),
    ("nsyr-bestcase-100-tsize", "bestcase(100)", "nsyr-tsize", "99,99,197,293"),
]
