cc149 cc075 cc027 cc048 cc071 cc088 cc070 cc070
cc085 cc077 cc027 cc048 cc088 cc070
cc084 cc043 cc045 cc077 cc149
cc079 cc070 cc070 cc070 cc055 cc041
cc079 cc070 cc024 cc025 cc078 cc070 cc071
cc072 cc024 cc025 cc070 cc070 cc072
cc070 cc070 cc081 cc077 cc070 cc075 cc070 cc070 cc070
cc071 cc081 cc072 cc071 cc079 cc070 cc071 cc070 cc088
cc070 cc071 cc070 cc074 cc074 cc072
cc070 cc071 cc077 cc071 cc079 cc070
cc070 cc074 cc149 cc076 cc070 cc070 cc074 cc070
cc149 cc055 cc041 cc071 cc073 cc070 cc070
cc076 cc072 cc071 cc024 cc025 cc072 cc070
cc055 cc041 cc070 cc077 cc070 cc071
cc076 cc070 cc071 cc070 cc149 cc082 cc071 cc070
cc083 cc053 cc035 cc070 cc074 cc080 cc070
cc071 cc071 cc070 cc071 cc093
cc071 cc068 cc061 cc112 cc071
cc070 cc053 cc035 cc087 cc070 cc070 cc073
cc084 cc076 cc070 cc101 cc071 cc071 cc071
cc071 cc070 cc070 cc072 cc075 cc092 cc087 cc070
cc055 cc041 cc070 cc070 cc073 cc073 cc071
cc072 cc071 cc070 cc071 cc076 cc070 cc072 cc073
cc072 cc149 cc070 cc053 cc035 cc070 cc070
cc068 cc061 cc070 cc071 cc070 cc070 cc071 cc070 cc081
cc070 cc072 cc070 cc074 cc071 cc070 cc070 cc072
cc091 cc071 cc024 cc025 cc070
cc071 cc105 cc070 cc070 cc024 cc025 cc070 cc071
cc149 cc070 cc053 cc035 cc071 cc070 cc070 cc077 cc149
cc071 cc081 cc072 cc070 cc070
cc149 cc070 cc070 cc072 cc109 cc070 cc071 cc074
cc024 cc025 cc070 cc070 cc070
cc053 cc062 cc079 cc070 cc070 cc070
cc071 cc070 cc089 cc071 cc070 cc070 cc074
cc071 cc149 cc079 cc149 cc070 cc071
cc070 cc074 cc070 cc070 cc071 cc108 cc070 cc070 cc070
cc071 cc149 cc072 cc111 cc070 cc070 cc070 cc055 cc041
cc071 cc073 cc105 cc055 cc041 cc070 cc090
cc105 cc070 cc076 cc072 cc070
cc070 cc115 cc070 cc070 cc070
cc071 cc070 cc072 cc070 cc070 cc077
cc070 cc070 cc070 cc053 cc035 cc072 cc149 cc070
cc071 cc073 cc070 cc070 cc073 cc070
cc071 cc086 cc108 cc070 cc070 cc070 cc070 cc027 cc048
cc071 cc070 cc070 cc075 cc071 cc073 cc070 cc070
cc070 cc053 cc062 cc070 cc073 cc070
cc070 cc072 cc070 cc070 cc078 cc070 cc071 cc074 cc073
cc149 cc070 cc071 cc095 cc070
cc070 cc072 cc055 cc041 cc073 cc070
cc072 cc070 cc149 cc075 cc070 cc141 cc070 cc084
cc080 cc070 cc149 cc070 cc076 cc075 cc070
cc070 cc070 cc076 cc104 cc070 cc070
cc070 cc071 cc077 cc070 cc070 cc149 cc070 cc070 cc070
cc070 cc071 cc070 cc070 cc070 cc071
cc149 cc071 cc073 cc073 cc070 cc073 cc071
cc079 cc070 cc072 cc072 cc081 cc070 cc055 cc041
cc103 cc071 cc070 cc024 cc025
cc070 cc149 cc074 cc063 cc028 cc071 cc071 cc070
cc070 cc055 cc041 cc076 cc070 cc070 cc070
cc070 cc070 cc043 cc045 cc074 cc070
cc073 cc070 cc071 cc070 cc085
cc149 cc071 cc070 cc070 cc070 cc072 cc070
cc070 cc070 cc055 cc041 cc070 cc144
cc078 cc070 cc027 cc048 cc072 cc072
cc074 cc072 cc149 cc070 cc070 cc070 cc070 cc073 cc075
cc077 cc024 cc025 cc071 cc073 cc082
cc070 cc070 cc073 cc070 cc079
cc070 cc055 cc041 cc071 cc070 cc070 cc070
cc070 cc072 cc076 cc053 cc035
cc070 cc149 cc070 cc094 cc071 cc070 cc070 cc073 cc071
cc073 cc072 cc071 cc081 cc071 cc070 cc070 cc071
cc070 cc070 cc070 cc053 cc035
cc073 cc070 cc070 cc070 cc075 cc070
cc070 cc076 cc071 cc070 cc072 cc070 cc074 cc070 cc070
cc071 cc070 cc070 cc071 cc074 cc070 cc070 cc073 cc072
cc070 cc070 cc077 cc075 cc063 cc028
cc080 cc079 cc078 cc070 cc070 cc072
cc071 cc077 cc071 cc027 cc048 cc071
cc070 cc024 cc025 cc079 cc070
cc070 cc043 cc045 cc072 cc078
cc070 cc149 cc102 cc070 cc073 cc070 cc071
cc070 cc070 cc071 cc070 cc134 cc070 cc070
cc070 cc071 cc081 cc072 cc078 cc079 cc070 cc070
cc149 cc070 cc070 cc073 cc071
cc071 cc071 cc070 cc149 cc070
cc070 cc070 cc070 cc063 cc028
cc083 cc070 cc071 cc073 cc092 cc070 cc070 cc070 cc071
cc070 cc055 cc041 cc093 cc070
cc071 cc071 cc078 cc073 cc070 cc071 cc076 cc070 cc070
cc070 cc102 cc071 cc071 cc071
cc070 cc070 cc072 cc070 cc024 cc025 cc075 cc070 cc072
cc070 cc043 cc045 cc110 cc149
cc071 cc070 cc070 cc077 cc071 cc070
cc043 cc045 cc071 cc086 cc101 cc070 cc072 cc070 cc070
cc070 cc075 cc070 cc071 cc073 cc071
cc072 cc070 cc071 cc117 cc070 cc071
cc071 cc070 cc070 cc070 cc071 cc072 cc070 cc084 cc070
cc070 cc070 cc071 cc070 cc070 cc070
cc107 cc070 cc071 cc027 cc048 cc070 cc149 cc079
cc070 cc096 cc072 cc070 cc072
cc072 cc071 cc071 cc072 cc070
cc070 cc070 cc070 cc071 cc070
cc070 cc072 cc076 cc082 cc072 cc071 cc078 cc071
cc070 cc070 cc077 cc043 cc045
cc071 cc070 cc071 cc074 cc070 cc043 cc045
cc070 cc074 cc070 cc070 cc070 cc070 cc024 cc025
cc072 cc070 cc079 cc072 cc070 cc070
cc074 cc105 cc070 cc070 cc070 cc070
cc070 cc075 cc070 cc070 cc071 cc053 cc062 cc070 cc070
cc071 cc043 cc045 cc081 cc070 cc083 cc070 cc073
cc079 cc043 cc045 cc070 cc074
cc053 cc035 cc070 cc071 cc070 cc070 cc149 cc070 cc070
cc070 cc149 cc027 cc048 cc074 cc072 cc093 cc097 cc070
cc070 cc070 cc071 cc070 cc078 cc068 cc061
cc072 cc070 cc070 cc149 cc072 cc070 cc070 cc074
cc070 cc149 cc070 cc087 cc070 cc063 cc028
cc078 cc070 cc080 cc070 cc070
cc070 cc070 cc082 cc070 cc070 cc071
cc149 cc024 cc025 cc070 cc070 cc070
cc070 cc070 cc070 cc070 cc068 cc061
cc070 cc071 cc053 cc035 cc083
cc070 cc070 cc115 cc072 cc149 cc070 cc024 cc025 cc070
cc083 cc113 cc071 cc053 cc035
cc070 cc070 cc071 cc070 cc071 cc073 cc070 cc070 cc073
cc070 cc080 cc070 cc073 cc070 cc088 cc078 cc070 cc070
cc070 cc070 cc149 cc068 cc061 cc149 cc071
cc074 cc070 cc070 cc081 cc149 cc070 cc071 cc070 cc070
cc149 cc071 cc070 cc071 cc071 cc072 cc149 cc070 cc070
cc073 cc071 cc079 cc088 cc080 cc070 cc070 cc063 cc028
cc071 cc053 cc035 cc074 cc070
cc070 cc024 cc025 cc070 cc082 cc112 cc070
cc102 cc080 cc070 cc070 cc149 cc070 cc071
cc079 cc070 cc070 cc070 cc070
cc075 cc073 cc074 cc070 cc070 cc071
cc070 cc074 cc070 cc068 cc061
cc070 cc071 cc107 cc070 cc053 cc035
cc070 cc070 cc070 cc081 cc149 cc105 cc075
cc070 cc077 cc070 cc027 cc048 cc070
cc053 cc062 cc071 cc070 cc071 cc071 cc072
cc043 cc045 cc070 cc070 cc070
cc070 cc070 cc074 cc073 cc071 cc071 cc070 cc075
cc090 cc149 cc116 cc135 cc134 cc070 cc149
cc070 cc070 cc073 cc095 cc070
cc073 cc073 cc070 cc070 cc121 cc104 cc125 cc071
cc070 cc074 cc084 cc027 cc048 cc073
cc070 cc070 cc070 cc108 cc122 cc071 cc071 cc070
cc070 cc070 cc135 cc117 cc138
cc102 cc118 cc138 cc071 cc070 cc099 cc071 cc070
cc139 cc126 cc114 cc070 cc070 cc077 cc070 cc070 cc070
cc134 cc137 cc120 cc071 cc070 cc071 cc070 cc070
cc070 cc071 cc072 cc072 cc071 cc072 cc070
cc130 cc110 cc149 cc070 cc071
cc071 cc071 cc073 cc075 cc071 cc124 cc114
cc076 cc071 cc071 cc070 cc125 cc107 cc100
cc074 cc070 cc070 cc070 cc149 cc071 cc107
cc086 cc116 cc134 cc137 cc120 cc090 cc070 cc072
cc070 cc101 cc070 cc072 cc071
cc070 cc070 cc071 cc053 cc062 cc071 cc149 cc071 cc071
cc090 cc070 cc125 cc076 cc121 cc104 cc125 cc070 cc094
cc070 cc094 cc070 cc125 cc107 cc100 cc078
cc074 cc070 cc070 cc070 cc072 cc116 cc135 cc134 cc072
cc070 cc078 cc071 cc077 cc073 cc070
cc072 cc070 cc124 cc114 cc141 cc071
cc073 cc123 cc070 cc071 cc149 cc072 cc070 cc071 cc070
cc072 cc071 cc093 cc121 cc104 cc125 cc076
cc070 cc076 cc070 cc070 cc076 cc071 cc074 cc072 cc070
cc149 cc072 cc083 cc070 cc078
cc125 cc107 cc100 cc070 cc070
cc070 cc074 cc108 cc122 cc073 cc073 cc148 cc077 cc072
cc071 cc072 cc073 cc070 cc075 cc127 cc074
cc070 cc070 cc073 cc072 cc070 cc071 cc113 cc071
cc072 cc149 cc074 cc070 cc070 cc097 cc070 cc070 cc070
cc070 cc072 cc070 cc070 cc073 cc070 cc071
cc084 cc070 cc073 cc072 cc093 cc073
cc071 cc077 cc070 cc116 cc135 cc134
cc072 cc070 cc070 cc071 cc076 cc071
cc070 cc124 cc114 cc070 cc070 cc071
cc101 cc118 cc094 cc074 cc070 cc071 cc149 cc070 cc070
cc070 cc070 cc070 cc072 cc070 cc144 cc074 cc070 cc070
cc070 cc074 cc071 cc074 cc071 cc149
cc070 cc124 cc116 cc071 cc070 cc077
cc071 cc070 cc070 cc113 cc070 cc070 cc124 cc116 cc070
cc070 cc071 cc070 cc070 cc074 cc070 cc070 cc074
cc070 cc074 cc072 cc070 cc070 cc053 cc062 cc125
cc076 cc070 cc070 cc070 cc053 cc062 cc070
cc070 cc073 cc070 cc149 cc071 cc149 cc070 cc070 cc070
cc074 cc102 cc118 cc138 cc070 cc075 cc149 cc070
cc070 cc071 cc070 cc070 cc070 cc127 cc122 cc100 cc070
cc073 cc070 cc074 cc072 cc053 cc062 cc070 cc070 cc071
cc071 cc070 cc072 cc125 cc107 cc100 cc070
cc071 cc071 cc070 cc073 cc076 cc070 cc072
cc070 cc149 cc085 cc070 cc070
cc072 cc070 cc070 cc083 cc121 cc104 cc125
cc149 cc090 cc102 cc118 cc138 cc075 cc071 cc070
cc070 cc070 cc134 cc137 cc120
cc070 cc071 cc130 cc110 cc071 cc071
cc077 cc124 cc082 cc071 cc081 cc070
cc070 cc108 cc122 cc072 cc072 cc099 cc070 cc101 cc070
cc102 cc118 cc138 cc070 cc070 cc070 cc070
cc070 cc071 cc072 cc102 cc118 cc138
cc070 cc070 cc075 cc072 cc070 cc071 cc070 cc072
cc075 cc127 cc122 cc100 cc071 cc070 cc071
cc070 cc081 cc124 cc116 cc071 cc074 cc071 cc071
cc070 cc076 cc070 cc070 cc073
cc071 cc070 cc120 cc070 cc071 cc070 cc074 cc073
cc076 cc070 cc106 cc071 cc072 cc073
cc070 cc071 cc070 cc070 cc074
cc070 cc084 cc121 cc104 cc125
cc149 cc077 cc070 cc072 cc071
cc083 cc070 cc074 cc070 cc070 cc081 cc070
cc071 cc071 cc149 cc070 cc070 cc079 cc072 cc071
cc100 cc070 cc070 cc102 cc118 cc138 cc070 cc073
cc070 cc070 cc072 cc070 cc070 cc127 cc122 cc100 cc070
cc149 cc071 cc070 cc070 cc108 cc122 cc072 cc072 cc070
cc070 cc070 cc070 cc071 cc070 cc071 cc130 cc110
cc149 cc110 cc070 cc075 cc070 cc077 cc104 cc084
cc093 cc070 cc070 cc071 cc070 cc071 cc070 cc075
cc130 cc110 cc147 cc070 cc070 cc070 cc074 cc072
cc076 cc070 cc071 cc071 cc083 cc072
cc070 cc071 cc070 cc097 cc071 cc070 cc071 cc130 cc070
cc121 cc104 cc125 cc070 cc070 cc070 cc071
cc070 cc070 cc141 cc096 cc070 cc073 cc070 cc072
cc101 cc118 cc070 cc073 cc073 cc070 cc070 cc139 cc080
cc070 cc071 cc070 cc081 cc070 cc070 cc070 cc071
cc134 cc072 cc070 cc070 cc070 cc070 cc073 cc071 cc076
cc121 cc104 cc125 cc070 cc070 cc071 cc076
cc072 cc071 cc070 cc070 cc072 cc072
cc072 cc073 cc070 cc070 cc080 cc071
cc072 cc124 cc114 cc071 cc071 cc076
cc070 cc075 cc139 cc126 cc114 cc096
cc149 cc070 cc118 cc073 cc130 cc110
cc071 cc070 cc078 cc070 cc072 cc139 cc126 cc114
cc124 cc116 cc071 cc074 cc070 cc070 cc075 cc073
cc070 cc149 cc070 cc070 cc070 cc100 cc070 cc071
cc053 cc062 cc070 cc073 cc070 cc098 cc077
cc070 cc070 cc027 cc048 cc070 cc070 cc070 cc079 cc070
cc149 cc072 cc070 cc070 cc072 cc070 cc077 cc072 cc072
cc076 cc070 cc078 cc131 cc070 cc071 cc070
cc070 cc071 cc070 cc103 cc137 cc091 cc070 cc074
cc070 cc135 cc117 cc138 cc070 cc077 cc070 cc070
cc070 cc149 cc130 cc110 cc070
cc149 cc072 cc070 cc071 cc072 cc086 cc073 cc073 cc070
cc072 cc073 cc103 cc137 cc070 cc070 cc076
cc134 cc137 cc120 cc148 cc070
cc070 cc070 cc073 cc071 cc116 cc127 cc122 cc100
cc072 cc070 cc072 cc070 cc070 cc070 cc070 cc072 cc149
cc077 cc070 cc071 cc070 cc070 cc070 cc070
cc124 cc114 cc149 cc070 cc074 cc100 cc070
cc090 cc070 cc074 cc072 cc071 cc071 cc070 cc070
cc101 cc115 cc072 cc070 cc071 cc079 cc079 cc070
cc114 cc070 cc072 cc076 cc083 cc075 cc070
cc070 cc130 cc077 cc075 cc072 cc080
cc070 cc078 cc070 cc120 cc130 cc110 cc080
cc070 cc076 cc070 cc125 cc107 cc100 cc070
cc074 cc070 cc079 cc073 cc121 cc104 cc125 cc101
cc073 cc112 cc121 cc104 cc125
cc070 cc073 cc101 cc116 cc135 cc134 cc070
cc072 cc127 cc122 cc100 cc149 cc070 cc074 cc072
cc074 cc071 cc071 cc072 cc103 cc137 cc070 cc072 cc091
cc072 cc071 cc072 cc070 cc074 cc070 cc075
cc107 cc070 cc070 cc071 cc087 cc070 cc070
cc071 cc125 cc071 cc070 cc119 cc134 cc137 cc120
cc071 cc117 cc072 cc070 cc073
cc079 cc073 cc070 cc078 cc073 cc072 cc071 cc070 cc087
cc071 cc135 cc117 cc138 cc070
cc073 cc132 cc100 cc070 cc070 cc073 cc081
cc070 cc070 cc071 cc070 cc073 cc071 cc101 cc118
cc070 cc071 cc135 cc070 cc073 cc081 cc077
cc071 cc071 cc134 cc137 cc120 cc070
cc070 cc070 cc076 cc070 cc072 cc112
cc072 cc070 cc070 cc149 cc070 cc075 cc070 cc070 cc070
cc074 cc071 cc070 cc070 cc070
cc027 cc048 cc070 cc070 cc070
cc053 cc062 cc072 cc073 cc070 cc149 cc071 cc072 cc070
cc076 cc070 cc070 cc130 cc110
cc070 cc070 cc085 cc149 cc070 cc072
cc101 cc118 cc149 cc071 cc070 cc070 cc084 cc072
cc073 cc087 cc070 cc074 cc070 cc070 cc070
cc073 cc071 cc070 cc071 cc070 cc070 cc112
cc070 cc070 cc070 cc070 cc070
