// Generated file: embedded reference data for the bundled tile sets and
// substitution rules. Do not edit by hand.
namespace wangweave::detail {

const char* builtin_json() {
    return R"wwjson({
 "markers": {
  "T0": [
   0,
   1
  ],
  "T1": [
   8,
   9,
   10,
   11,
   12
  ],
  "T10": [
   0,
   4,
   5,
   6,
   7,
   8
  ],
  "T11": [
   0,
   1,
   2,
   9,
   10,
   11
  ],
  "T2": [
   8,
   9,
   10,
   11,
   12,
   13,
   14,
   15,
   16,
   17,
   18,
   19
  ],
  "T3": [
   0,
   1,
   2,
   3
  ],
  "T6": [
   1,
   6,
   7,
   8,
   11,
   12,
   16,
   17,
   18,
   19,
   23,
   26,
   28
  ],
  "T7": [
   0,
   1,
   2,
   3,
   4,
   5,
   6
  ],
  "T8": [
   0,
   1,
   2,
   7,
   8,
   9,
   10,
   11
  ],
  "T9": [
   0,
   1,
   2,
   3,
   9,
   10,
   11,
   12,
   13
  ]
 },
 "morphisms": {
  "eta": {
   "rules": {
    "0": {
     "rows_top_to_bottom": [
      [
       0
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "1": {
     "rows_top_to_bottom": [
      [
       1
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "10": {
     "rows_top_to_bottom": [
      [
       10
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "11": {
     "rows_top_to_bottom": [
      [
       11
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "12": {
     "rows_top_to_bottom": [
      [
       12
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "13": {
     "rows_top_to_bottom": [
      [
       13
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "14": {
     "rows_top_to_bottom": [
      [
       14
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "15": {
     "rows_top_to_bottom": [
      [
       15
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "16": {
     "rows_top_to_bottom": [
      [
       16
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "17": {
     "rows_top_to_bottom": [
      [
       17
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "18": {
     "rows_top_to_bottom": [
      [
       18
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "19": {
     "rows_top_to_bottom": [
      [
       19
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "2": {
     "rows_top_to_bottom": [
      [
       2
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "20": {
     "rows_top_to_bottom": [
      [
       20
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "21": {
     "rows_top_to_bottom": [
      [
       21
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "22": {
     "rows_top_to_bottom": [
      [
       22
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "23": {
     "rows_top_to_bottom": [
      [
       23
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "24": {
     "rows_top_to_bottom": [
      [
       24
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "25": {
     "rows_top_to_bottom": [
      [
       25
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "26": {
     "rows_top_to_bottom": [
      [
       26
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "27": {
     "rows_top_to_bottom": [
      [
       27
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "28": {
     "rows_top_to_bottom": [
      [
       28
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "3": {
     "rows_top_to_bottom": [
      [
       3
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "4": {
     "rows_top_to_bottom": [
      [
       4
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "5": {
     "rows_top_to_bottom": [
      [
       5
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "6": {
     "rows_top_to_bottom": [
      [
       6
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "7": {
     "rows_top_to_bottom": [
      [
       7
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "8": {
     "rows_top_to_bottom": [
      [
       8
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "9": {
     "rows_top_to_bottom": [
      [
       9
      ]
     ],
     "shape": [
      1,
      1
     ]
    }
   }
  },
  "iota": {
   "rules": {
    "0": {
     "rows_top_to_bottom": [
      [
       0
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "1": {
     "rows_top_to_bottom": [
      [
       1
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "10": {
     "rows_top_to_bottom": [
      [
       10
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "11": {
     "rows_top_to_bottom": [
      [
       11
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "12": {
     "rows_top_to_bottom": [
      [
       12
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "13": {
     "rows_top_to_bottom": [
      [
       13
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "14": {
     "rows_top_to_bottom": [
      [
       14
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "15": {
     "rows_top_to_bottom": [
      [
       15
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "16": {
     "rows_top_to_bottom": [
      [
       16
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "17": {
     "rows_top_to_bottom": [
      [
       17
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "18": {
     "rows_top_to_bottom": [
      [
       18
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "19": {
     "rows_top_to_bottom": [
      [
       19
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "2": {
     "rows_top_to_bottom": [
      [
       2
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "20": {
     "rows_top_to_bottom": [
      [
       20
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "21": {
     "rows_top_to_bottom": [
      [
       21
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "22": {
     "rows_top_to_bottom": [
      [
       22
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "23": {
     "rows_top_to_bottom": [
      [
       23
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "24": {
     "rows_top_to_bottom": [
      [
       25
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "25": {
     "rows_top_to_bottom": [
      [
       26
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "26": {
     "rows_top_to_bottom": [
      [
       27
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "27": {
     "rows_top_to_bottom": [
      [
       29
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "3": {
     "rows_top_to_bottom": [
      [
       3
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "4": {
     "rows_top_to_bottom": [
      [
       4
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "5": {
     "rows_top_to_bottom": [
      [
       5
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "6": {
     "rows_top_to_bottom": [
      [
       6
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "7": {
     "rows_top_to_bottom": [
      [
       7
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "8": {
     "rows_top_to_bottom": [
      [
       8
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "9": {
     "rows_top_to_bottom": [
      [
       9
      ]
     ],
     "shape": [
      1,
      1
     ]
    }
   }
  },
  "jmath": {
   "rules": {
    "0": {
     "rows_top_to_bottom": [
      [
       0
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "1": {
     "rows_top_to_bottom": [
      [
       1
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "10": {
     "rows_top_to_bottom": [
      [
       10
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "11": {
     "rows_top_to_bottom": [
      [
       11
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "12": {
     "rows_top_to_bottom": [
      [
       12
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "13": {
     "rows_top_to_bottom": [
      [
       13
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "14": {
     "rows_top_to_bottom": [
      [
       14
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "15": {
     "rows_top_to_bottom": [
      [
       15
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "16": {
     "rows_top_to_bottom": [
      [
       16
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "17": {
     "rows_top_to_bottom": [
      [
       17
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "18": {
     "rows_top_to_bottom": [
      [
       18
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "19": {
     "rows_top_to_bottom": [
      [
       19
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "2": {
     "rows_top_to_bottom": [
      [
       2
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "20": {
     "rows_top_to_bottom": [
      [
       20
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "21": {
     "rows_top_to_bottom": [
      [
       21
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "22": {
     "rows_top_to_bottom": [
      [
       22
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "23": {
     "rows_top_to_bottom": [
      [
       22
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "24": {
     "rows_top_to_bottom": [
      [
       23
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "25": {
     "rows_top_to_bottom": [
      [
       24
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "26": {
     "rows_top_to_bottom": [
      [
       25
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "27": {
     "rows_top_to_bottom": [
      [
       26
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "28": {
     "rows_top_to_bottom": [
      [
       27
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "3": {
     "rows_top_to_bottom": [
      [
       3
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "4": {
     "rows_top_to_bottom": [
      [
       4
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "5": {
     "rows_top_to_bottom": [
      [
       5
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "6": {
     "rows_top_to_bottom": [
      [
       6
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "7": {
     "rows_top_to_bottom": [
      [
       7
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "8": {
     "rows_top_to_bottom": [
      [
       8
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "9": {
     "rows_top_to_bottom": [
      [
       9
      ]
     ],
     "shape": [
      1,
      1
     ]
    }
   }
  },
  "omega0": {
   "rules": {
    "0": {
     "rows_top_to_bottom": [
      [
       2
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "1": {
     "rows_top_to_bottom": [
      [
       3
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "10": {
     "rows_top_to_bottom": [
      [
       7
      ],
      [
       1
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "11": {
     "rows_top_to_bottom": [
      [
       8
      ],
      [
       1
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "12": {
     "rows_top_to_bottom": [
      [
       10
      ],
      [
       1
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "2": {
     "rows_top_to_bottom": [
      [
       4
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "3": {
     "rows_top_to_bottom": [
      [
       5
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "4": {
     "rows_top_to_bottom": [
      [
       6
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "5": {
     "rows_top_to_bottom": [
      [
       7
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "6": {
     "rows_top_to_bottom": [
      [
       8
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "7": {
     "rows_top_to_bottom": [
      [
       10
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "8": {
     "rows_top_to_bottom": [
      [
       9
      ],
      [
       0
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "9": {
     "rows_top_to_bottom": [
      [
       3
      ],
      [
       1
      ]
     ],
     "shape": [
      1,
      2
     ]
    }
   }
  },
  "omega0123": {
   "rules": {
    "0": {
     "rows_top_to_bottom": [
      [
       7
      ],
      [
       3
      ],
      [
       9
      ],
      [
       0
      ]
     ],
     "shape": [
      1,
      4
     ]
    },
    "1": {
     "rows_top_to_bottom": [
      [
       5
      ],
      [
       7
      ],
      [
       9
      ],
      [
       0
      ]
     ],
     "shape": [
      1,
      4
     ]
    },
    "10": {
     "rows_top_to_bottom": [
      [
       4
      ],
      [
       10
      ],
      [
       8
      ],
      [
       1
      ]
     ],
     "shape": [
      1,
      4
     ]
    },
    "11": {
     "rows_top_to_bottom": [
      [
       5
      ],
      [
       4
      ],
      [
       10
      ],
      [
       1
      ]
     ],
     "shape": [
      1,
      4
     ]
    },
    "12": {
     "rows_top_to_bottom": [
      [
       6
      ],
      [
       4
      ],
      [
       10
      ],
      [
       1
      ]
     ],
     "shape": [
      1,
      4
     ]
    },
    "13": {
     "rows_top_to_bottom": [
      [
       7
      ],
      [
       3
      ],
      [
       3
      ],
      [
       9
      ],
      [
       0
      ]
     ],
     "shape": [
      1,
      5
     ]
    },
    "14": {
     "rows_top_to_bottom": [
      [
       6
      ],
      [
       7
      ],
      [
       3
      ],
      [
       9
      ],
      [
       0
      ]
     ],
     "shape": [
      1,
      5
     ]
    },
    "15": {
     "rows_top_to_bottom": [
      [
       7
      ],
      [
       8
      ],
      [
       3
      ],
      [
       9
      ],
      [
       0
      ]
     ],
     "shape": [
      1,
      5
     ]
    },
    "16": {
     "rows_top_to_bottom": [
      [
       5
      ],
      [
       2
      ],
      [
       7
      ],
      [
       9
      ],
      [
       0
      ]
     ],
     "shape": [
      1,
      5
     ]
    },
    "17": {
     "rows_top_to_bottom": [
      [
       6
      ],
      [
       2
      ],
      [
       7
      ],
      [
       9
      ],
      [
       0
      ]
     ],
     "shape": [
      1,
      5
     ]
    },
    "18": {
     "rows_top_to_bottom": [
      [
       5
      ],
      [
       5
      ],
      [
       7
      ],
      [
       9
      ],
      [
       0
      ]
     ],
     "shape": [
      1,
      5
     ]
    },
    "19": {
     "rows_top_to_bottom": [
      [
       6
      ],
      [
       5
      ],
      [
       7
      ],
      [
       9
      ],
      [
       0
      ]
     ],
     "shape": [
      1,
      5
     ]
    },
    "2": {
     "rows_top_to_bottom": [
      [
       4
      ],
      [
       10
      ],
      [
       9
      ],
      [
       0
      ]
     ],
     "shape": [
      1,
      4
     ]
    },
    "20": {
     "rows_top_to_bottom": [
      [
       5
      ],
      [
       7
      ],
      [
       8
      ],
      [
       9
      ],
      [
       0
      ]
     ],
     "shape": [
      1,
      5
     ]
    },
    "21": {
     "rows_top_to_bottom": [
      [
       4
      ],
      [
       10
      ],
      [
       8
      ],
      [
       9
      ],
      [
       0
      ]
     ],
     "shape": [
      1,
      5
     ]
    },
    "22": {
     "rows_top_to_bottom": [
      [
       6
      ],
      [
       4
      ],
      [
       10
      ],
      [
       9
      ],
      [
       0
      ]
     ],
     "shape": [
      1,
      5
     ]
    },
    "23": {
     "rows_top_to_bottom": [
      [
       6
      ],
      [
       7
      ],
      [
       3
      ],
      [
       3
      ],
      [
       1
      ]
     ],
     "shape": [
      1,
      5
     ]
    },
    "24": {
     "rows_top_to_bottom": [
      [
       6
      ],
      [
       7
      ],
      [
       8
      ],
      [
       3
      ],
      [
       1
      ]
     ],
     "shape": [
      1,
      5
     ]
    },
    "25": {
     "rows_top_to_bottom": [
      [
       6
      ],
      [
       5
      ],
      [
       2
      ],
      [
       7
      ],
      [
       1
      ]
     ],
     "shape": [
      1,
      5
     ]
    },
    "26": {
     "rows_top_to_bottom": [
      [
       6
      ],
      [
       4
      ],
      [
       10
      ],
      [
       8
      ],
      [
       1
      ]
     ],
     "shape": [
      1,
      5
     ]
    },
    "27": {
     "rows_top_to_bottom": [
      [
       6
      ],
      [
       5
      ],
      [
       4
      ],
      [
       10
      ],
      [
       1
      ]
     ],
     "shape": [
      1,
      5
     ]
    },
    "3": {
     "rows_top_to_bottom": [
      [
       7
      ],
      [
       3
      ],
      [
       3
      ],
      [
       1
      ]
     ],
     "shape": [
      1,
      4
     ]
    },
    "4": {
     "rows_top_to_bottom": [
      [
       6
      ],
      [
       7
      ],
      [
       3
      ],
      [
       1
      ]
     ],
     "shape": [
      1,
      4
     ]
    },
    "5": {
     "rows_top_to_bottom": [
      [
       7
      ],
      [
       8
      ],
      [
       3
      ],
      [
       1
      ]
     ],
     "shape": [
      1,
      4
     ]
    },
    "6": {
     "rows_top_to_bottom": [
      [
       5
      ],
      [
       2
      ],
      [
       7
      ],
      [
       1
      ]
     ],
     "shape": [
      1,
      4
     ]
    },
    "7": {
     "rows_top_to_bottom": [
      [
       5
      ],
      [
       5
      ],
      [
       7
      ],
      [
       1
      ]
     ],
     "shape": [
      1,
      4
     ]
    },
    "8": {
     "rows_top_to_bottom": [
      [
       6
      ],
      [
       5
      ],
      [
       7
      ],
      [
       1
      ]
     ],
     "shape": [
      1,
      4
     ]
    },
    "9": {
     "rows_top_to_bottom": [
      [
       5
      ],
      [
       7
      ],
      [
       8
      ],
      [
       1
      ]
     ],
     "shape": [
      1,
      4
     ]
    }
   }
  },
  "omega1": {
   "rules": {
    "0": {
     "rows_top_to_bottom": [
      [
       0
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "1": {
     "rows_top_to_bottom": [
      [
       1
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "10": {
     "rows_top_to_bottom": [
      [
       6
      ],
      [
       8
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "11": {
     "rows_top_to_bottom": [
      [
       7
      ],
      [
       8
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "12": {
     "rows_top_to_bottom": [
      [
       1
      ],
      [
       9
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "13": {
     "rows_top_to_bottom": [
      [
       5
      ],
      [
       9
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "14": {
     "rows_top_to_bottom": [
      [
       6
      ],
      [
       9
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "15": {
     "rows_top_to_bottom": [
      [
       0
      ],
      [
       10
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "16": {
     "rows_top_to_bottom": [
      [
       3
      ],
      [
       10
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "17": {
     "rows_top_to_bottom": [
      [
       5
      ],
      [
       11
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "18": {
     "rows_top_to_bottom": [
      [
       7
      ],
      [
       11
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "19": {
     "rows_top_to_bottom": [
      [
       2
      ],
      [
       12
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "2": {
     "rows_top_to_bottom": [
      [
       2
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "3": {
     "rows_top_to_bottom": [
      [
       3
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "4": {
     "rows_top_to_bottom": [
      [
       4
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "5": {
     "rows_top_to_bottom": [
      [
       5
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "6": {
     "rows_top_to_bottom": [
      [
       6
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "7": {
     "rows_top_to_bottom": [
      [
       7
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "8": {
     "rows_top_to_bottom": [
      [
       1
      ],
      [
       8
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "9": {
     "rows_top_to_bottom": [
      [
       5
      ],
      [
       8
      ]
     ],
     "shape": [
      1,
      2
     ]
    }
   }
  },
  "omega10": {
   "rules": {
    "0": {
     "rows_top_to_bottom": [
      [
       1
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "1": {
     "rows_top_to_bottom": [
      [
       2
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "10": {
     "rows_top_to_bottom": [
      [
       0
      ],
      [
       2
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "11": {
     "rows_top_to_bottom": [
      [
       0
      ],
      [
       3
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "12": {
     "rows_top_to_bottom": [
      [
       8
      ],
      [
       9
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "13": {
     "rows_top_to_bottom": [
      [
       4
      ],
      [
       10
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "14": {
     "rows_top_to_bottom": [
      [
       4
      ],
      [
       11
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "15": {
     "rows_top_to_bottom": [
      [
       6
      ],
      [
       12
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "16": {
     "rows_top_to_bottom": [
      [
       5
      ],
      [
       13
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "17": {
     "rows_top_to_bottom": [
      [
       8
      ],
      [
       13
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "18": {
     "rows_top_to_bottom": [
      [
       7
      ],
      [
       14
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "19": {
     "rows_top_to_bottom": [
      [
       5
      ],
      [
       15
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "2": {
     "rows_top_to_bottom": [
      [
       3
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "20": {
     "rows_top_to_bottom": [
      [
       7
      ],
      [
       17
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "3": {
     "rows_top_to_bottom": [
      [
       12
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "4": {
     "rows_top_to_bottom": [
      [
       13
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "5": {
     "rows_top_to_bottom": [
      [
       14
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "6": {
     "rows_top_to_bottom": [
      [
       15
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "7": {
     "rows_top_to_bottom": [
      [
       16
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "8": {
     "rows_top_to_bottom": [
      [
       17
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "9": {
     "rows_top_to_bottom": [
      [
       0
      ],
      [
       1
      ]
     ],
     "shape": [
      1,
      2
     ]
    }
   }
  },
  "omega11": {
   "rules": {
    "0": {
     "rows_top_to_bottom": [
      [
       5
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "1": {
     "rows_top_to_bottom": [
      [
       8
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "10": {
     "rows_top_to_bottom": [
      [
       7,
       1
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "11": {
     "rows_top_to_bottom": [
      [
       8,
       1
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "12": {
     "rows_top_to_bottom": [
      [
       12,
       11
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "13": {
     "rows_top_to_bottom": [
      [
       13,
       11
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "14": {
     "rows_top_to_bottom": [
      [
       14,
       9
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "15": {
     "rows_top_to_bottom": [
      [
       15,
       10
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "16": {
     "rows_top_to_bottom": [
      [
       16,
       11
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "17": {
     "rows_top_to_bottom": [
      [
       17,
       11
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "18": {
     "rows_top_to_bottom": [
      [
       19,
       9
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "2": {
     "rows_top_to_bottom": [
      [
       14
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "3": {
     "rows_top_to_bottom": [
      [
       15
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "4": {
     "rows_top_to_bottom": [
      [
       18
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "5": {
     "rows_top_to_bottom": [
      [
       20
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "6": {
     "rows_top_to_bottom": [
      [
       3,
       1
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "7": {
     "rows_top_to_bottom": [
      [
       4,
       2
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "8": {
     "rows_top_to_bottom": [
      [
       5,
       1
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "9": {
     "rows_top_to_bottom": [
      [
       6,
       0
      ]
     ],
     "shape": [
      2,
      1
     ]
    }
   }
  },
  "omega2": {
   "rules": {
    "0": {
     "rows_top_to_bottom": [
      [
       2
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "1": {
     "rows_top_to_bottom": [
      [
       3
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "10": {
     "rows_top_to_bottom": [
      [
       7
      ],
      [
       10
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "11": {
     "rows_top_to_bottom": [
      [
       2
      ],
      [
       11
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "12": {
     "rows_top_to_bottom": [
      [
       5
      ],
      [
       12
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "13": {
     "rows_top_to_bottom": [
      [
       6
      ],
      [
       12
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "14": {
     "rows_top_to_bottom": [
      [
       4
      ],
      [
       13
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "15": {
     "rows_top_to_bottom": [
      [
       5
      ],
      [
       14
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "16": {
     "rows_top_to_bottom": [
      [
       3
      ],
      [
       15
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "17": {
     "rows_top_to_bottom": [
      [
       3
      ],
      [
       16
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "18": {
     "rows_top_to_bottom": [
      [
       4
      ],
      [
       16
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "19": {
     "rows_top_to_bottom": [
      [
       3
      ],
      [
       17
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "2": {
     "rows_top_to_bottom": [
      [
       4
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "20": {
     "rows_top_to_bottom": [
      [
       2
      ],
      [
       18
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "21": {
     "rows_top_to_bottom": [
      [
       0
      ],
      [
       19
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "22": {
     "rows_top_to_bottom": [
      [
       3
      ],
      [
       19
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "23": {
     "rows_top_to_bottom": [
      [
       4
      ],
      [
       19
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "3": {
     "rows_top_to_bottom": [
      [
       5
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "4": {
     "rows_top_to_bottom": [
      [
       1
      ],
      [
       8
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "5": {
     "rows_top_to_bottom": [
      [
       5
      ],
      [
       8
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "6": {
     "rows_top_to_bottom": [
      [
       6
      ],
      [
       8
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "7": {
     "rows_top_to_bottom": [
      [
       0
      ],
      [
       9
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "8": {
     "rows_top_to_bottom": [
      [
       3
      ],
      [
       9
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "9": {
     "rows_top_to_bottom": [
      [
       5
      ],
      [
       10
      ]
     ],
     "shape": [
      1,
      2
     ]
    }
   }
  },
  "omega3": {
   "rules": {
    "0": {
     "rows_top_to_bottom": [
      [
       5
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "1": {
     "rows_top_to_bottom": [
      [
       8
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "10": {
     "rows_top_to_bottom": [
      [
       20
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "11": {
     "rows_top_to_bottom": [
      [
       22
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "12": {
     "rows_top_to_bottom": [
      [
       23
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "13": {
     "rows_top_to_bottom": [
      [
       3
      ],
      [
       4
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "14": {
     "rows_top_to_bottom": [
      [
       2
      ],
      [
       5
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "15": {
     "rows_top_to_bottom": [
      [
       3
      ],
      [
       6
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "16": {
     "rows_top_to_bottom": [
      [
       1
      ],
      [
       7
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "17": {
     "rows_top_to_bottom": [
      [
       2
      ],
      [
       7
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "18": {
     "rows_top_to_bottom": [
      [
       1
      ],
      [
       8
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "19": {
     "rows_top_to_bottom": [
      [
       2
      ],
      [
       8
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "2": {
     "rows_top_to_bottom": [
      [
       11
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "20": {
     "rows_top_to_bottom": [
      [
       1
      ],
      [
       9
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "21": {
     "rows_top_to_bottom": [
      [
       0
      ],
      [
       10
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "22": {
     "rows_top_to_bottom": [
      [
       2
      ],
      [
       11
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "23": {
     "rows_top_to_bottom": [
      [
       2
      ],
      [
       12
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "24": {
     "rows_top_to_bottom": [
      [
       3
      ],
      [
       13
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "25": {
     "rows_top_to_bottom": [
      [
       2
      ],
      [
       15
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "26": {
     "rows_top_to_bottom": [
      [
       2
      ],
      [
       16
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "27": {
     "rows_top_to_bottom": [
      [
       2
      ],
      [
       20
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "28": {
     "rows_top_to_bottom": [
      [
       2
      ],
      [
       21
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "29": {
     "rows_top_to_bottom": [
      [
       2
      ],
      [
       22
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "3": {
     "rows_top_to_bottom": [
      [
       12
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "4": {
     "rows_top_to_bottom": [
      [
       14
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "5": {
     "rows_top_to_bottom": [
      [
       15
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "6": {
     "rows_top_to_bottom": [
      [
       16
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "7": {
     "rows_top_to_bottom": [
      [
       17
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "8": {
     "rows_top_to_bottom": [
      [
       18
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "9": {
     "rows_top_to_bottom": [
      [
       19
      ]
     ],
     "shape": [
      1,
      1
     ]
    }
   }
  },
  "omega6": {
   "rules": {
    "0": {
     "rows_top_to_bottom": [
      [
       2
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "1": {
     "rows_top_to_bottom": [
      [
       9
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "10": {
     "rows_top_to_bottom": [
      [
       8,
       4
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "11": {
     "rows_top_to_bottom": [
      [
       11,
       3
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "12": {
     "rows_top_to_bottom": [
      [
       12,
       3
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "13": {
     "rows_top_to_bottom": [
      [
       16,
       15
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "14": {
     "rows_top_to_bottom": [
      [
       17,
       15
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "15": {
     "rows_top_to_bottom": [
      [
       18,
       14
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "16": {
     "rows_top_to_bottom": [
      [
       19,
       14
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "17": {
     "rows_top_to_bottom": [
      [
       23,
       13
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "18": {
     "rows_top_to_bottom": [
      [
       26,
       25
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "19": {
     "rows_top_to_bottom": [
      [
       28,
       24
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "2": {
     "rows_top_to_bottom": [
      [
       10
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "3": {
     "rows_top_to_bottom": [
      [
       20
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "4": {
     "rows_top_to_bottom": [
      [
       21
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "5": {
     "rows_top_to_bottom": [
      [
       22
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "6": {
     "rows_top_to_bottom": [
      [
       27
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "7": {
     "rows_top_to_bottom": [
      [
       1,
       0
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "8": {
     "rows_top_to_bottom": [
      [
       6,
       5
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "9": {
     "rows_top_to_bottom": [
      [
       7,
       4
      ]
     ],
     "shape": [
      2,
      1
     ]
    }
   }
  },
  "omega7": {
   "rules": {
    "0": {
     "rows_top_to_bottom": [
      [
       8
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "1": {
     "rows_top_to_bottom": [
      [
       9
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "10": {
     "rows_top_to_bottom": [
      [
       11,
       2
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "11": {
     "rows_top_to_bottom": [
      [
       12,
       2
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "12": {
     "rows_top_to_bottom": [
      [
       13,
       3
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "13": {
     "rows_top_to_bottom": [
      [
       14,
       3
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "14": {
     "rows_top_to_bottom": [
      [
       15,
       5
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "15": {
     "rows_top_to_bottom": [
      [
       15,
       6
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "16": {
     "rows_top_to_bottom": [
      [
       16,
       5
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "17": {
     "rows_top_to_bottom": [
      [
       16,
       6
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "18": {
     "rows_top_to_bottom": [
      [
       17,
       4
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "19": {
     "rows_top_to_bottom": [
      [
       19,
       6
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "2": {
     "rows_top_to_bottom": [
      [
       10
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "3": {
     "rows_top_to_bottom": [
      [
       15
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "4": {
     "rows_top_to_bottom": [
      [
       16
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "5": {
     "rows_top_to_bottom": [
      [
       18
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "6": {
     "rows_top_to_bottom": [
      [
       19
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "7": {
     "rows_top_to_bottom": [
      [
       7,
       0
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "8": {
     "rows_top_to_bottom": [
      [
       7,
       2
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "9": {
     "rows_top_to_bottom": [
      [
       8,
       1
      ]
     ],
     "shape": [
      2,
      1
     ]
    }
   }
  },
  "omega8": {
   "rules": {
    "0": {
     "rows_top_to_bottom": [
      [
       3
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "1": {
     "rows_top_to_bottom": [
      [
       4
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "10": {
     "rows_top_to_bottom": [
      [
       0
      ],
      [
       5
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "11": {
     "rows_top_to_bottom": [
      [
       1
      ],
      [
       5
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "12": {
     "rows_top_to_bottom": [
      [
       2
      ],
      [
       5
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "13": {
     "rows_top_to_bottom": [
      [
       0
      ],
      [
       6
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "14": {
     "rows_top_to_bottom": [
      [
       8
      ],
      [
       13
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "15": {
     "rows_top_to_bottom": [
      [
       10
      ],
      [
       14
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "16": {
     "rows_top_to_bottom": [
      [
       10
      ],
      [
       15
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "17": {
     "rows_top_to_bottom": [
      [
       11
      ],
      [
       16
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "18": {
     "rows_top_to_bottom": [
      [
       9
      ],
      [
       17
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "19": {
     "rows_top_to_bottom": [
      [
       11
      ],
      [
       17
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "2": {
     "rows_top_to_bottom": [
      [
       5
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "20": {
     "rows_top_to_bottom": [
      [
       7
      ],
      [
       18
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "21": {
     "rows_top_to_bottom": [
      [
       9
      ],
      [
       19
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "3": {
     "rows_top_to_bottom": [
      [
       6
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "4": {
     "rows_top_to_bottom": [
      [
       12
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "5": {
     "rows_top_to_bottom": [
      [
       13
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "6": {
     "rows_top_to_bottom": [
      [
       14
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "7": {
     "rows_top_to_bottom": [
      [
       15
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "8": {
     "rows_top_to_bottom": [
      [
       18
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "9": {
     "rows_top_to_bottom": [
      [
       0
      ],
      [
       4
      ]
     ],
     "shape": [
      1,
      2
     ]
    }
   }
  },
  "omega9": {
   "rules": {
    "0": {
     "rows_top_to_bottom": [
      [
       8
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "1": {
     "rows_top_to_bottom": [
      [
       14
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "10": {
     "rows_top_to_bottom": [
      [
       15,
       13
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "11": {
     "rows_top_to_bottom": [
      [
       16,
       10
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "12": {
     "rows_top_to_bottom": [
      [
       16,
       11
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "13": {
     "rows_top_to_bottom": [
      [
       17,
       13
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "14": {
     "rows_top_to_bottom": [
      [
       18,
       12
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "15": {
     "rows_top_to_bottom": [
      [
       19,
       10
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "16": {
     "rows_top_to_bottom": [
      [
       19,
       11
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "17": {
     "rows_top_to_bottom": [
      [
       21,
       12
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "2": {
     "rows_top_to_bottom": [
      [
       17
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "3": {
     "rows_top_to_bottom": [
      [
       20
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "4": {
     "rows_top_to_bottom": [
      [
       4,
       1
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "5": {
     "rows_top_to_bottom": [
      [
       5,
       1
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "6": {
     "rows_top_to_bottom": [
      [
       6,
       3
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "7": {
     "rows_top_to_bottom": [
      [
       7,
       2
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "8": {
     "rows_top_to_bottom": [
      [
       8,
       0
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "9": {
     "rows_top_to_bottom": [
      [
       14,
       9
      ]
     ],
     "shape": [
      2,
      1
     ]
    }
   }
  },
  "omegaU": {
   "rules": {
    "0": {
     "rows_top_to_bottom": [
      [
       17
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "1": {
     "rows_top_to_bottom": [
      [
       16
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "10": {
     "rows_top_to_bottom": [
      [
       3
      ],
      [
       16
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "11": {
     "rows_top_to_bottom": [
      [
       2
      ],
      [
       14
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "12": {
     "rows_top_to_bottom": [
      [
       7,
       1
      ],
      [
       15,
       11
      ]
     ],
     "shape": [
      2,
      2
     ]
    },
    "13": {
     "rows_top_to_bottom": [
      [
       6,
       1
      ],
      [
       14,
       11
      ]
     ],
     "shape": [
      2,
      2
     ]
    },
    "14": {
     "rows_top_to_bottom": [
      [
       7,
       1
      ],
      [
       13,
       9
      ]
     ],
     "shape": [
      2,
      2
     ]
    },
    "15": {
     "rows_top_to_bottom": [
      [
       6,
       1
      ],
      [
       12,
       9
      ]
     ],
     "shape": [
      2,
      2
     ]
    },
    "16": {
     "rows_top_to_bottom": [
      [
       5,
       1
      ],
      [
       18,
       10
      ]
     ],
     "shape": [
      2,
      2
     ]
    },
    "17": {
     "rows_top_to_bottom": [
      [
       4,
       1
      ],
      [
       13,
       9
      ]
     ],
     "shape": [
      2,
      2
     ]
    },
    "18": {
     "rows_top_to_bottom": [
      [
       2,
       0
      ],
      [
       14,
       8
      ]
     ],
     "shape": [
      2,
      2
     ]
    },
    "2": {
     "rows_top_to_bottom": [
      [
       15,
       11
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "3": {
     "rows_top_to_bottom": [
      [
       13,
       9
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "4": {
     "rows_top_to_bottom": [
      [
       17,
       8
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "5": {
     "rows_top_to_bottom": [
      [
       16,
       8
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "6": {
     "rows_top_to_bottom": [
      [
       15,
       8
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "7": {
     "rows_top_to_bottom": [
      [
       14,
       8
      ]
     ],
     "shape": [
      2,
      1
     ]
    },
    "8": {
     "rows_top_to_bottom": [
      [
       6
      ],
      [
       14
      ]
     ],
     "shape": [
      1,
      2
     ]
    },
    "9": {
     "rows_top_to_bottom": [
      [
       3
      ],
      [
       17
      ]
     ],
     "shape": [
      1,
      2
     ]
    }
   }
  },
  "rho": {
   "rules": {
    "0": {
     "rows_top_to_bottom": [
      [
       0
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "1": {
     "rows_top_to_bottom": [
      [
       1
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "10": {
     "rows_top_to_bottom": [
      [
       5
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "11": {
     "rows_top_to_bottom": [
      [
       3
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "12": {
     "rows_top_to_bottom": [
      [
       18
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "13": {
     "rows_top_to_bottom": [
      [
       14
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "14": {
     "rows_top_to_bottom": [
      [
       16
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "15": {
     "rows_top_to_bottom": [
      [
       13
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "16": {
     "rows_top_to_bottom": [
      [
       12
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "17": {
     "rows_top_to_bottom": [
      [
       17
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "18": {
     "rows_top_to_bottom": [
      [
       15
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "2": {
     "rows_top_to_bottom": [
      [
       9
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "3": {
     "rows_top_to_bottom": [
      [
       7
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "4": {
     "rows_top_to_bottom": [
      [
       8
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "5": {
     "rows_top_to_bottom": [
      [
       11
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "6": {
     "rows_top_to_bottom": [
      [
       10
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "7": {
     "rows_top_to_bottom": [
      [
       6
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "8": {
     "rows_top_to_bottom": [
      [
       2
      ]
     ],
     "shape": [
      1,
      1
     ]
    },
    "9": {
     "rows_top_to_bottom": [
      [
       4
      ]
     ],
     "shape": [
      1,
      1
     ]
    }
   }
  }
 },
 "tilesets": {
  "T0": {
   "tiles": [
    [
     "2",
     "4",
     "2",
     "1"
    ],
    [
     "2",
     "2",
     "2",
     "0"
    ],
    [
     "1",
     "1",
     "3",
     "1"
    ],
    [
     "1",
     "2",
     "3",
     "2"
    ],
    [
     "3",
     "1",
     "3",
     "3"
    ],
    [
     "0",
     "1",
     "3",
     "1"
    ],
    [
     "0",
     "0",
     "0",
     "1"
    ],
    [
     "3",
     "1",
     "0",
     "2"
    ],
    [
     "0",
     "2",
     "1",
     "2"
    ],
    [
     "1",
     "2",
     "1",
     "4"
    ],
    [
     "3",
     "3",
     "1",
     "2"
    ]
   ]
  },
  "T1": {
   "tiles": [
    [
     "1",
     "1",
     "3",
     "1"
    ],
    [
     "1",
     "2",
     "3",
     "2"
    ],
    [
     "3",
     "1",
     "3",
     "3"
    ],
    [
     "0",
     "1",
     "3",
     "1"
    ],
    [
     "0",
     "0",
     "0",
     "1"
    ],
    [
     "3",
     "1",
     "0",
     "2"
    ],
    [
     "0",
     "2",
     "1",
     "2"
    ],
    [
     "3",
     "3",
     "1",
     "2"
    ],
    [
     "21",
     "2",
     "21",
     "1"
    ],
    [
     "21",
     "2",
     "23",
     "0"
    ],
    [
     "23",
     "1",
     "20",
     "0"
    ],
    [
     "20",
     "2",
     "21",
     "0"
    ],
    [
     "23",
     "3",
     "21",
     "0"
    ]
   ]
  },
  "T10": {
   "tiles": [
    [
     "210331",
     "511",
     "211300",
     "511"
    ],
    [
     "21030020331",
     "511",
     "21030021031",
     "511"
    ],
    [
     "21330020331",
     "511",
     "21030021300",
     "511"
    ],
    [
     "21033121331",
     "511",
     "21130021031",
     "511"
    ],
    [
     "211300",
     "51060",
     "210331",
     "51151"
    ],
    [
     "211300",
     "51060",
     "210300",
     "51151"
    ],
    [
     "211300",
     "60060",
     "210331",
     "51160"
    ],
    [
     "210300",
     "60060",
     "210331",
     "51060"
    ],
    [
     "211300",
     "51160",
     "211300",
     "51151"
    ],
    [
     "21130021031",
     "51151",
     "21030021031",
     "51151"
    ],
    [
     "21130021031",
     "51151",
     "21033121331",
     "51160"
    ],
    [
     "21030021031",
     "51151",
     "21033121331",
     "51060"
    ],
    [
     "21030021300",
     "51160",
     "21033121331",
     "51060"
    ],
    [
     "21130021031",
     "51151",
     "21030021300",
     "51160"
    ],
    [
     "21030021300",
     "51060",
     "21030020331",
     "51060"
    ],
    [
     "21030021031",
     "51151",
     "21030021300",
     "51060"
    ],
    [
     "21030021300",
     "51160",
     "21030021300",
     "51060"
    ],
    [
     "21030021300",
     "51060",
     "21330020331",
     "60060"
    ]
   ]
  },
  "T11": {
   "tiles": [
    [
     "21030020331",
     "511",
     "21030021031",
     "511"
    ],
    [
     "21330020331",
     "511",
     "21030021300",
     "511"
    ],
    [
     "21033121331",
     "511",
     "21130021031",
     "511"
    ],
    [
     "21030021300",
     "51160",
     "21033121331",
     "51060"
    ],
    [
     "21130021031",
     "51151",
     "21030021300",
     "51160"
    ],
    [
     "21030021300",
     "51060",
     "21030020331",
     "51060"
    ],
    [
     "21030021031",
     "51151",
     "21030021300",
     "51060"
    ],
    [
     "21030021300",
     "51160",
     "21030021300",
     "51060"
    ],
    [
     "21030021300",
     "51060",
     "21330020331",
     "60060"
    ],
    [
     "21030020331210331",
     "511",
     "21030021031211300",
     "511"
    ],
    [
     "21330020331210331",
     "511",
     "21030021300211300",
     "511"
    ],
    [
     "21033121331210331",
     "511",
     "21130021031211300",
     "511"
    ],
    [
     "21130021031211300",
     "51160",
     "21030021031211300",
     "51151"
    ],
    [
     "21130021031211300",
     "51060",
     "21033121331210331",
     "51160"
    ],
    [
     "21030021031211300",
     "51060",
     "21033121331210331",
     "51060"
    ],
    [
     "21030021300211300",
     "60060",
     "21033121331210331",
     "51060"
    ],
    [
     "21130021031211300",
     "51060",
     "21030021300210300",
     "51160"
    ],
    [
     "21130021031211300",
     "51160",
     "21030021300211300",
     "51160"
    ],
    [
     "21030021300210300",
     "60060",
     "21030020331210331",
     "51060"
    ],
    [
     "21030021031211300",
     "51060",
     "21030021300210300",
     "51060"
    ],
    [
     "21030021300210300",
     "60060",
     "21330020331210331",
     "60060"
    ]
   ]
  },
  "T12": {
   "tiles": [
    [
     "21030021300",
     "51060",
     "21030020331",
     "51060"
    ],
    [
     "21030021300",
     "51060",
     "21330020331",
     "60060"
    ],
    [
     "21030021031211300",
     "51060",
     "21033121331210331",
     "51060"
    ],
    [
     "21030021300211300",
     "60060",
     "21033121331210331",
     "51060"
    ],
    [
     "21030021300210300",
     "60060",
     "21030020331210331",
     "51060"
    ],
    [
     "21030021300210300",
     "60060",
     "21330020331210331",
     "60060"
    ],
    [
     "21330020331",
     "51160511",
     "21033121331",
     "51060511"
    ],
    [
     "21033121331",
     "51151511",
     "21030021300",
     "51160511"
    ],
    [
     "21330020331",
     "51060511",
     "21030020331",
     "51060511"
    ],
    [
     "21030020331",
     "51151511",
     "21030021300",
     "51060511"
    ],
    [
     "21330020331",
     "51160511",
     "21030021300",
     "51060511"
    ],
    [
     "21330020331",
     "51060511",
     "21330020331",
     "60060511"
    ],
    [
     "21033121331210331",
     "51160511",
     "21030021031211300",
     "51151511"
    ],
    [
     "21033121331210331",
     "51060511",
     "21033121331210331",
     "51160511"
    ],
    [
     "21030020331210331",
     "51060511",
     "21033121331210331",
     "51060511"
    ],
    [
     "21330020331210331",
     "60060511",
     "21033121331210331",
     "51060511"
    ],
    [
     "21033121331210331",
     "51060511",
     "21030021300210300",
     "51160511"
    ],
    [
     "21033121331210331",
     "51160511",
     "21030021300211300",
     "51160511"
    ],
    [
     "21030020331210331",
     "51060511",
     "21030021300210300",
     "51060511"
    ]
   ]
  },
  "T2": {
   "tiles": [
    [
     "1",
     "1",
     "3",
     "1"
    ],
    [
     "1",
     "2",
     "3",
     "2"
    ],
    [
     "3",
     "1",
     "3",
     "3"
    ],
    [
     "0",
     "1",
     "3",
     "1"
    ],
    [
     "0",
     "0",
     "0",
     "1"
    ],
    [
     "3",
     "1",
     "0",
     "2"
    ],
    [
     "0",
     "2",
     "1",
     "2"
    ],
    [
     "3",
     "3",
     "1",
     "2"
    ],
    [
     "211",
     "2",
     "213",
     "1"
    ],
    [
     "213",
     "1",
     "210",
     "1"
    ],
    [
     "210",
     "2",
     "211",
     "1"
    ],
    [
     "213",
     "3",
     "211",
     "1"
    ],
    [
     "211",
     "2",
     "233",
     "0"
    ],
    [
     "213",
     "1",
     "230",
     "0"
    ],
    [
     "210",
     "2",
     "231",
     "0"
    ],
    [
     "231",
     "1",
     "203",
     "0"
    ],
    [
     "230",
     "1",
     "203",
     "0"
    ],
    [
     "203",
     "1",
     "210",
     "0"
    ],
    [
     "203",
     "3",
     "211",
     "0"
    ],
    [
     "233",
     "1",
     "213",
     "0"
    ]
   ]
  },
  "T3": {
   "tiles": [
    [
     "3",
     "1",
     "3",
     "3"
    ],
    [
     "0",
     "1",
     "3",
     "1"
    ],
    [
     "0",
     "0",
     "0",
     "1"
    ],
    [
     "3",
     "1",
     "0",
     "2"
    ],
    [
     "2111",
     "2",
     "2133",
     "1"
    ],
    [
     "2113",
     "1",
     "2130",
     "1"
    ],
    [
     "2110",
     "2",
     "2131",
     "1"
    ],
    [
     "2131",
     "1",
     "2103",
     "1"
    ],
    [
     "2130",
     "1",
     "2103",
     "1"
    ],
    [
     "2103",
     "1",
     "2110",
     "1"
    ],
    [
     "2103",
     "3",
     "2111",
     "1"
    ],
    [
     "2133",
     "1",
     "2113",
     "1"
    ],
    [
     "2113",
     "1",
     "2330",
     "0"
    ],
    [
     "2110",
     "2",
     "2331",
     "0"
    ],
    [
     "2130",
     "0",
     "2300",
     "0"
    ],
    [
     "2103",
     "1",
     "2310",
     "0"
    ],
    [
     "2310",
     "1",
     "2033",
     "0"
    ],
    [
     "2300",
     "1",
     "2033",
     "0"
    ],
    [
     "2300",
     "0",
     "2030",
     "0"
    ],
    [
     "2030",
     "1",
     "2103",
     "0"
    ],
    [
     "2033",
     "1",
     "2113",
     "0"
    ],
    [
     "2331",
     "1",
     "2133",
     "0"
    ],
    [
     "2330",
     "1",
     "2133",
     "0"
    ],
    [
     "2330",
     "0",
     "2130",
     "0"
    ]
   ]
  },
  "T4": {
   "tiles": [
    [
     "2113",
     "1",
     "2130",
     "1"
    ],
    [
     "2130",
     "1",
     "2103",
     "1"
    ],
    [
     "2133",
     "1",
     "2113",
     "1"
    ],
    [
     "2113",
     "1",
     "2330",
     "0"
    ],
    [
     "2130",
     "0",
     "2300",
     "0"
    ],
    [
     "2103",
     "1",
     "2310",
     "0"
    ],
    [
     "2310",
     "1",
     "2033",
     "0"
    ],
    [
     "2300",
     "1",
     "2033",
     "0"
    ],
    [
     "2300",
     "0",
     "2030",
     "0"
    ],
    [
     "2030",
     "1",
     "2103",
     "0"
    ],
    [
     "2033",
     "1",
     "2113",
     "0"
    ],
    [
     "2330",
     "1",
     "2133",
     "0"
    ],
    [
     "2330",
     "0",
     "2130",
     "0"
    ],
    [
     "21113",
     "1",
     "21330",
     "1"
    ],
    [
     "21130",
     "0",
     "21300",
     "1"
    ],
    [
     "21103",
     "1",
     "21310",
     "1"
    ],
    [
     "21310",
     "1",
     "21033",
     "1"
    ],
    [
     "21310",
     "0",
     "21030",
     "1"
    ],
    [
     "21300",
     "1",
     "21033",
     "1"
    ],
    [
     "21300",
     "0",
     "21030",
     "1"
    ],
    [
     "21030",
     "1",
     "21103",
     "1"
    ],
    [
     "21033",
     "1",
     "21113",
     "1"
    ],
    [
     "21330",
     "0",
     "21130",
     "1"
    ],
    [
     "21130",
     "0",
     "23300",
     "0"
    ],
    [
     "21030",
     "0",
     "23100",
     "0"
    ],
    [
     "23100",
     "0",
     "20330",
     "0"
    ],
    [
     "20330",
     "0",
     "21130",
     "0"
    ],
    [
     "23300",
     "0",
     "21330",
     "0"
    ]
   ]
  },
  "T4p": {
   "tiles": [
    [
     "2113",
     "1",
     "2130",
     "1"
    ],
    [
     "2130",
     "1",
     "2103",
     "1"
    ],
    [
     "2133",
     "1",
     "2113",
     "1"
    ],
    [
     "2113",
     "1",
     "2330",
     "0"
    ],
    [
     "2130",
     "0",
     "2300",
     "0"
    ],
    [
     "2103",
     "1",
     "2310",
     "0"
    ],
    [
     "2310",
     "1",
     "2033",
     "0"
    ],
    [
     "2300",
     "1",
     "2033",
     "0"
    ],
    [
     "2300",
     "0",
     "2030",
     "0"
    ],
    [
     "2030",
     "1",
     "2103",
     "0"
    ],
    [
     "2033",
     "1",
     "2113",
     "0"
    ],
    [
     "2330",
     "1",
     "2133",
     "0"
    ],
    [
     "2330",
     "0",
     "2130",
     "0"
    ],
    [
     "21113",
     "1",
     "21330",
     "1"
    ],
    [
     "21130",
     "0",
     "21300",
     "1"
    ],
    [
     "21103",
     "1",
     "21310",
     "1"
    ],
    [
     "21310",
     "1",
     "21033",
     "1"
    ],
    [
     "21310",
     "0",
     "21030",
     "1"
    ],
    [
     "21300",
     "1",
     "21033",
     "1"
    ],
    [
     "21300",
     "0",
     "21030",
     "1"
    ],
    [
     "21030",
     "1",
     "21103",
     "1"
    ],
    [
     "21033",
     "1",
     "21113",
     "1"
    ],
    [
     "21330",
     "0",
     "21130",
     "1"
    ],
    [
     "21130",
     "0",
     "23300",
     "0"
    ],
    [
     "21103",
     "1",
     "23310",
     "0"
    ],
    [
     "21030",
     "0",
     "23100",
     "0"
    ],
    [
     "23100",
     "0",
     "20330",
     "0"
    ],
    [
     "20330",
     "0",
     "21130",
     "0"
    ],
    [
     "23310",
     "0",
     "21330",
     "0"
    ],
    [
     "23300",
     "0",
     "21330",
     "0"
    ]
   ]
  },
  "T5": {
   "tiles": [
    [
     "2113",
     "5",
     "2130",
     "1"
    ],
    [
     "2130",
     "1",
     "2103",
     "5"
    ],
    [
     "2133",
     "1",
     "2113",
     "1"
    ],
    [
     "2113",
     "5",
     "2330",
     "0"
    ],
    [
     "2130",
     "6",
     "2300",
     "0"
    ],
    [
     "2103",
     "5",
     "2310",
     "0"
    ],
    [
     "2310",
     "1",
     "2033",
     "6"
    ],
    [
     "2300",
     "1",
     "2033",
     "6"
    ],
    [
     "2300",
     "0",
     "2030",
     "6"
    ],
    [
     "2030",
     "1",
     "2103",
     "0"
    ],
    [
     "2033",
     "1",
     "2113",
     "0"
    ],
    [
     "2330",
     "1",
     "2133",
     "6"
    ],
    [
     "2330",
     "0",
     "2130",
     "6"
    ],
    [
     "21113",
     "5",
     "21330",
     "1"
    ],
    [
     "21130",
     "6",
     "21300",
     "1"
    ],
    [
     "21103",
     "5",
     "21310",
     "1"
    ],
    [
     "21310",
     "1",
     "21033",
     "5"
    ],
    [
     "21310",
     "0",
     "21030",
     "5"
    ],
    [
     "21300",
     "1",
     "21033",
     "5"
    ],
    [
     "21300",
     "0",
     "21030",
     "5"
    ],
    [
     "21030",
     "1",
     "21103",
     "1"
    ],
    [
     "21033",
     "1",
     "21113",
     "1"
    ],
    [
     "21330",
     "0",
     "21130",
     "1"
    ],
    [
     "21330",
     "0",
     "21130",
     "5"
    ],
    [
     "21130",
     "6",
     "23300",
     "0"
    ],
    [
     "21030",
     "6",
     "23100",
     "0"
    ],
    [
     "23100",
     "0",
     "20330",
     "6"
    ],
    [
     "20330",
     "0",
     "21130",
     "0"
    ],
    [
     "23300",
     "0",
     "21330",
     "6"
    ]
   ]
  },
  "T6": {
   "tiles": [
    [
     "21131",
     "1",
     "21305",
     "1"
    ],
    [
     "21305",
     "5",
     "21031",
     "5"
    ],
    [
     "21331",
     "1",
     "21131",
     "1"
    ],
    [
     "21131",
     "1",
     "23305",
     "0"
    ],
    [
     "21300",
     "0",
     "23006",
     "0"
    ],
    [
     "21031",
     "1",
     "23105",
     "0"
    ],
    [
     "23105",
     "5",
     "20331",
     "6"
    ],
    [
     "23006",
     "6",
     "20331",
     "6"
    ],
    [
     "23006",
     "6",
     "20300",
     "6"
    ],
    [
     "20300",
     "0",
     "21031",
     "0"
    ],
    [
     "20331",
     "1",
     "21131",
     "0"
    ],
    [
     "23305",
     "5",
     "21331",
     "6"
    ],
    [
     "23305",
     "5",
     "21300",
     "6"
    ],
    [
     "211131",
     "1",
     "213305",
     "1"
    ],
    [
     "211300",
     "0",
     "213006",
     "1"
    ],
    [
     "211031",
     "1",
     "213105",
     "1"
    ],
    [
     "213105",
     "5",
     "210331",
     "5"
    ],
    [
     "213105",
     "5",
     "210300",
     "5"
    ],
    [
     "213006",
     "6",
     "210331",
     "5"
    ],
    [
     "213006",
     "6",
     "210300",
     "5"
    ],
    [
     "210300",
     "0",
     "211031",
     "1"
    ],
    [
     "210331",
     "1",
     "211131",
     "1"
    ],
    [
     "213300",
     "0",
     "211300",
     "1"
    ],
    [
     "213305",
     "5",
     "211300",
     "5"
    ],
    [
     "211300",
     "0",
     "233006",
     "0"
    ],
    [
     "210300",
     "0",
     "231006",
     "0"
    ],
    [
     "231006",
     "6",
     "203300",
     "6"
    ],
    [
     "203300",
     "0",
     "211300",
     "0"
    ],
    [
     "233006",
     "6",
     "213300",
     "6"
    ]
   ]
  },
  "T7": {
   "tiles": [
    [
     "21331",
     "1",
     "21131",
     "1"
    ],
    [
     "20300",
     "0",
     "21031",
     "0"
    ],
    [
     "20331",
     "1",
     "21131",
     "0"
    ],
    [
     "210300",
     "0",
     "211031",
     "1"
    ],
    [
     "210331",
     "1",
     "211131",
     "1"
    ],
    [
     "213300",
     "0",
     "211300",
     "1"
    ],
    [
     "203300",
     "0",
     "211300",
     "0"
    ],
    [
     "21131",
     "51",
     "21031",
     "51"
    ],
    [
     "21031",
     "51",
     "20331",
     "60"
    ],
    [
     "21300",
     "60",
     "20331",
     "60"
    ],
    [
     "21300",
     "60",
     "20300",
     "60"
    ],
    [
     "21131",
     "51",
     "21331",
     "60"
    ],
    [
     "21131",
     "51",
     "21300",
     "60"
    ],
    [
     "211031",
     "51",
     "210331",
     "51"
    ],
    [
     "211031",
     "51",
     "210300",
     "51"
    ],
    [
     "211300",
     "60",
     "210331",
     "51"
    ],
    [
     "211300",
     "60",
     "210300",
     "51"
    ],
    [
     "211131",
     "51",
     "211300",
     "51"
    ],
    [
     "210300",
     "60",
     "203300",
     "60"
    ],
    [
     "211300",
     "60",
     "213300",
     "60"
    ]
   ]
  },
  "T8": {
   "tiles": [
    [
     "21031",
     "51",
     "20331",
     "60"
    ],
    [
     "21300",
     "60",
     "20331",
     "60"
    ],
    [
     "21300",
     "60",
     "20300",
     "60"
    ],
    [
     "211300",
     "60",
     "210331",
     "51"
    ],
    [
     "211300",
     "60",
     "210300",
     "51"
    ],
    [
     "210300",
     "60",
     "203300",
     "60"
    ],
    [
     "211300",
     "60",
     "213300",
     "60"
    ],
    [
     "21331",
     "511",
     "21031",
     "511"
    ],
    [
     "20331",
     "511",
     "21031",
     "510"
    ],
    [
     "20300",
     "510",
     "20331",
     "600"
    ],
    [
     "20331",
     "511",
     "21331",
     "600"
    ],
    [
     "20331",
     "511",
     "21300",
     "600"
    ],
    [
     "210300",
     "510",
     "210331",
     "511"
    ],
    [
     "210300",
     "510",
     "210300",
     "511"
    ],
    [
     "213300",
     "600",
     "210331",
     "511"
    ],
    [
     "203300",
     "600",
     "210331",
     "510"
    ],
    [
     "213300",
     "600",
     "210300",
     "511"
    ],
    [
     "203300",
     "600",
     "210300",
     "510"
    ],
    [
     "210331",
     "511",
     "211300",
     "511"
    ],
    [
     "203300",
     "600",
     "213300",
     "600"
    ]
   ]
  },
  "T9": {
   "tiles": [
    [
     "211300",
     "60",
     "210331",
     "51"
    ],
    [
     "211300",
     "60",
     "210300",
     "51"
    ],
    [
     "210300",
     "60",
     "203300",
     "60"
    ],
    [
     "211300",
     "60",
     "213300",
     "60"
    ],
    [
     "210300",
     "510",
     "210331",
     "511"
    ],
    [
     "210300",
     "510",
     "210300",
     "511"
    ],
    [
     "213300",
     "600",
     "210331",
     "511"
    ],
    [
     "203300",
     "600",
     "210331",
     "510"
    ],
    [
     "210331",
     "511",
     "211300",
     "511"
    ],
    [
     "21130021031",
     "51",
     "21030020331",
     "51"
    ],
    [
     "21030021031",
     "51",
     "20330020331",
     "60"
    ],
    [
     "21030021300",
     "60",
     "20330020331",
     "60"
    ],
    [
     "21030021300",
     "60",
     "20330020300",
     "60"
    ],
    [
     "21130021031",
     "51",
     "21330020331",
     "60"
    ],
    [
     "21030020331",
     "511",
     "21030021031",
     "511"
    ],
    [
     "21330020331",
     "511",
     "21033121331",
     "511"
    ],
    [
     "20330020331",
     "511",
     "21033121331",
     "510"
    ],
    [
     "21330020331",
     "511",
     "21030021300",
     "511"
    ],
    [
     "20330020300",
     "510",
     "21030020331",
     "510"
    ],
    [
     "20330020331",
     "511",
     "21030021300",
     "510"
    ],
    [
     "21033121331",
     "511",
     "21130021031",
     "511"
    ],
    [
     "20330020300",
     "510",
     "21330020331",
     "600"
    ]
   ]
  },
  "U": {
   "tiles": [
    [
     "F",
     "O",
     "J",
     "O"
    ],
    [
     "F",
     "O",
     "H",
     "L"
    ],
    [
     "J",
     "M",
     "F",
     "P"
    ],
    [
     "D",
     "M",
     "F",
     "K"
    ],
    [
     "H",
     "P",
     "J",
     "P"
    ],
    [
     "H",
     "P",
     "H",
     "N"
    ],
    [
     "H",
     "K",
     "F",
     "P"
    ],
    [
     "H",
     "K",
     "D",
     "P"
    ],
    [
     "B",
     "O",
     "I",
     "O"
    ],
    [
     "G",
     "L",
     "E",
     "O"
    ],
    [
     "G",
     "L",
     "C",
     "L"
    ],
    [
     "A",
     "L",
     "I",
     "O"
    ],
    [
     "E",
     "P",
     "G",
     "P"
    ],
    [
     "E",
     "P",
     "I",
     "P"
    ],
    [
     "I",
     "P",
     "G",
     "K"
    ],
    [
     "I",
     "P",
     "I",
     "K"
    ],
    [
     "I",
     "K",
     "B",
     "M"
    ],
    [
     "I",
     "K",
     "A",
     "K"
    ],
    [
     "C",
     "N",
     "I",
     "P"
    ]
   ]
  }
 },
 "u_colors": {
  "A": "21030021300211300",
  "B": "21030021031211300",
  "C": "21330020331210331",
  "D": "21033121331",
  "E": "21030020331210331",
  "F": "21030021300",
  "G": "21030021300210300",
  "H": "21330020331",
  "I": "21033121331210331",
  "J": "21030020331",
  "K": "51160511",
  "L": "60060",
  "M": "51151511",
  "N": "60060511",
  "O": "51060",
  "P": "51060511"
 }
})wwjson";
}

} // namespace wangweave::detail
