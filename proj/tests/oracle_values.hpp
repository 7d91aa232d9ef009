// Generated by tests/oracles/gen_oracle_values.py (mpmath, 50 digits). Do not edit.
#pragma once

#include <array>

namespace thermcap::oracle {

struct Point { double x; double value; };
struct DeltaPoint { double y; double x; double value; };
struct BoundPoint { double lambda; double n_env; double n_signal; double lower_bits; double upper_bits; };

inline constexpr std::array<Point, 14> kG = {{
    {1e-12, 2.86310211159290482082159e-11},
    {1e-9, 2.172326583744641115599526e-8},
    {1e-6, 1.481551105796410743752462e-5},
    {1e-3, 7.908255112398753752030183e-3},
    {0.1, 3.350997070841619144501465e-1},
    {0.5, 9.547712524422192276756357e-1},
    {1, 1.386294361119890618834464},
    {2, 1.909542504884438455351271},
    {10, 3.350997070841619144501465},
    {123.456, 5.81992395213697724436884},
    {1e3, 7.908255112398753752030183},
    {1e6, 1.481551105796410743752462e+1},
    {1e9, 2.172326583744641115599526e+1},
    {1e12, 2.86310211159290482082159e+1},
}};

inline constexpr std::array<DeltaPoint, 7> kDelta = {{
    {1, 1, 4.315231086776713911588285e-1},
    {0.5, 5, 5.050562269116109631957847e-1},
    {1, 0.001, 3.607678903455839133273932e-3},
    {0.01, 1e6, 4.61512001684142945079834e-2},
    {100, 0.1, 6.845264107359016410800203e-3},
    {1e3, 1e-3, 1.380220901536537556190315e-5},
    {3, 7.25, 7.052214517869406446936308e-1},
}};

inline constexpr std::array<DeltaPoint, 7> kDeltaPrime = {{
    {1, 1, 1.438410362258904637196095e-1},
    {0.5, 5, 7.855424981827842698786794e-3},
    {1, 0.001, 3.108053612023353880528149},
    {0.01, 1e6, 4.999996600002575747918794e-15},
    {100, 0.1, 5.856149315633799522067308e-2},
    {1e3, 1e-3, 1.280320901486537606156981e-2},
    {3, 7.25, 1.675124187994947902750801e-2},
}};

inline constexpr std::array<BoundPoint, 9> kBounds = {{
    {0.5, 0, 4, 2.754887502163468544361217, 2.754887502163468544361217},
    {0.5, 1, 10, 2.648540514330229861302177, 3.377182628265702020698051},
    {0.9, 10, 100, 5.958387699163823877732479, 6.95046064378723014052994},
    {0.7, 0, 5, 3.438920279288791257036758, 3.438920279288791257036758},
    {0.6, 0.5, 2, 1.57165810998474166732573, 2.0},
    {0.6, 0.5, 1, 1.003910001730774835488973, 1.377443751081734272180608},
    {0.6, 0, 1, 1.527094404679943943257437, 1.527094404679943943257437},
    {0.01, 50, 100, 2.857008594515431608600569e-2, 1.40893015266734898959726e-1},
    {0.999, 1e-3, 1e6, 2.137279954114993045907236e+1, 2.137281947271922040821688e+1},
}};

inline constexpr double kRefinedHalfOne = 7.924812503605780907268695e-1;
inline constexpr double kG02 = 5.406734506395656263742135e-1;
inline constexpr double kPureLoss06Bits = 1.527094404679943943257437;

}  // namespace thermcap::oracle
