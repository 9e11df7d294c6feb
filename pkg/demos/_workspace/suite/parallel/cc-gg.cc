cc076 cc043 cc045 cc078 cc070 cc070
cc075 cc070 cc071 cc070 cc071 cc070 cc070
cc074 cc082 cc123 cc109 cc086 cc072 cc072 cc149
cc053 cc062 cc071 cc070 cc070 cc070
cc073 cc072 cc070 cc070 cc079 cc063 cc028 cc070
cc070 cc117 cc070 cc093 cc070 cc024 cc025 cc070
cc076 cc070 cc070 cc112 cc070 cc071 cc070 cc070
cc134 cc078 cc053 cc062 cc070 cc070 cc072 cc070
cc123 cc070 cc053 cc062 cc070
cc081 cc071 cc072 cc070 cc072 cc024 cc025 cc072
cc073 cc077 cc055 cc041 cc070 cc070
cc071 cc074 cc082 cc043 cc045 cc081 cc070
cc070 cc072 cc121 cc071 cc073
cc070 cc072 cc071 cc073 cc071 cc073
cc072 cc070 cc071 cc071 cc072 cc070 cc080 cc074
cc070 cc093 cc071 cc075 cc027 cc048
cc076 cc070 cc073 cc071 cc043 cc045
cc072 cc122 cc140 cc070 cc070 cc071 cc070 cc079 cc070
cc070 cc076 cc063 cc028 cc073 cc070 cc070 cc070 cc073
cc076 cc053 cc062 cc072 cc074 cc112
cc072 cc070 cc070 cc070 cc070 cc077 cc070 cc074
cc070 cc094 cc149 cc083 cc071 cc070 cc075 cc070 cc070
cc107 cc055 cc041 cc070 cc070
cc071 cc070 cc071 cc070 cc073 cc071 cc070 cc043 cc045
cc070 cc149 cc024 cc025 cc096 cc149
cc070 cc070 cc071 cc070 cc073 cc027 cc048
cc068 cc061 cc070 cc070 cc073 cc070 cc070
cc071 cc072 cc071 cc070 cc071 cc073 cc070
cc070 cc070 cc072 cc070 cc070 cc075 cc103 cc083
cc068 cc061 cc070 cc070 cc090
cc024 cc025 cc070 cc071 cc073 cc071
cc070 cc070 cc053 cc035 cc070 cc070 cc071 cc093 cc070
cc070 cc147 cc089 cc070 cc070
cc149 cc055 cc041 cc079 cc077 cc070 cc071
cc071 cc080 cc077 cc072 cc072
cc072 cc070 cc070 cc149 cc053 cc035 cc091
cc149 cc070 cc070 cc149 cc071 cc043 cc045 cc074
cc070 cc072 cc070 cc053 cc035 cc078 cc074 cc071 cc070
cc075 cc070 cc070 cc068 cc061 cc074
cc070 cc072 cc071 cc063 cc028 cc070 cc070 cc074 cc070
cc053 cc035 cc071 cc073 cc071
cc072 cc024 cc025 cc072 cc070 cc070
cc027 cc048 cc071 cc149 cc121 cc096 cc070 cc070
cc070 cc070 cc070 cc070 cc053 cc062 cc124 cc070 cc072
cc080 cc070 cc071 cc074 cc071 cc083 cc070 cc083
cc070 cc074 cc070 cc073 cc070 cc070 cc096 cc072 cc070
cc096 cc072 cc146 cc070 cc072 cc071 cc071 cc077 cc074
cc070 cc083 cc070 cc070 cc070 cc071 cc071 cc070
cc086 cc073 cc070 cc072 cc070
cc071 cc070 cc070 cc072 cc075 cc070 cc070 cc070 cc070
cc073 cc070 cc126 cc070 cc071 cc082 cc076 cc072 cc071
cc072 cc149 cc070 cc027 cc048 cc070 cc070
cc071 cc063 cc028 cc074 cc070 cc070
cc082 cc070 cc070 cc075 cc070 cc072 cc070 cc081
cc024 cc025 cc071 cc143 cc072 cc149
cc076 cc081 cc070 cc070 cc027 cc048
cc070 cc070 cc073 cc071 cc055 cc041
cc088 cc073 cc070 cc070 cc120 cc084
cc070 cc070 cc074 cc070 cc027 cc048 cc076
cc070 cc071 cc149 cc088 cc024 cc025 cc072 cc076 cc077
cc072 cc070 cc072 cc071 cc071
cc083 cc043 cc045 cc083 cc070 cc096 cc070 cc075 cc086
cc096 cc053 cc035 cc070 cc080 cc070 cc071 cc071 cc070
cc085 cc027 cc048 cc075 cc070
cc149 cc071 cc070 cc071 cc080 cc073 cc073 cc075 cc084
cc071 cc070 cc071 cc086 cc070 cc070
cc094 cc070 cc084 cc070 cc070 cc070 cc147 cc071 cc071
cc071 cc055 cc041 cc070 cc073 cc070
cc070 cc070 cc129 cc122 cc071 cc072 cc070
cc070 cc070 cc072 cc101 cc070 cc071 cc070 cc149 cc071
cc072 cc070 cc071 cc071 cc071 cc070 cc070 cc070
cc070 cc149 cc073 cc072 cc076 cc071 cc070 cc098
cc070 cc075 cc073 cc070 cc149 cc071
cc072 cc070 cc070 cc149 cc063 cc028 cc088 cc073 cc074
cc072 cc071 cc071 cc149 cc070 cc070 cc070 cc071 cc070
cc072 cc070 cc072 cc070 cc084 cc092 cc070
cc072 cc070 cc053 cc035 cc071
cc073 cc070 cc070 cc070 cc130 cc070 cc070
cc147 cc073 cc072 cc027 cc048 cc149 cc077 cc073
cc071 cc070 cc072 cc070 cc071 cc071 cc070 cc085 cc070
cc074 cc073 cc070 cc043 cc045 cc074 cc070 cc073 cc070
cc070 cc053 cc062 cc070 cc073 cc070 cc070
cc082 cc119 cc071 cc070 cc072 cc027 cc048 cc070
cc071 cc071 cc070 cc070 cc070 cc070 cc070 cc070
cc074 cc072 cc071 cc043 cc045 cc112
cc072 cc074 cc077 cc121 cc071
cc070 cc070 cc070 cc027 cc048 cc071
cc074 cc070 cc070 cc071 cc074 cc070 cc073 cc043 cc045
cc063 cc028 cc070 cc071 cc070 cc070
cc043 cc045 cc070 cc070 cc070 cc085 cc070 cc070
cc070 cc075 cc070 cc070 cc073 cc136 cc070
cc063 cc028 cc149 cc070 cc080
cc070 cc068 cc061 cc072 cc070 cc070 cc070
cc070 cc043 cc045 cc070 cc070 cc070
cc070 cc070 cc070 cc074 cc074
cc070 cc070 cc071 cc081 cc070
cc070 cc071 cc070 cc070 cc053 cc062
cc073 cc072 cc082 cc070 cc070
cc043 cc045 cc070 cc070 cc070 cc070
cc073 cc071 cc024 cc025 cc071
cc070 cc075 cc063 cc028 cc071 cc103
cc070 cc149 cc071 cc070 cc071
cc070 cc071 cc072 cc070 cc070 cc129 cc072 cc071 cc070
cc053 cc035 cc071 cc070 cc070 cc075 cc085 cc071
cc075 cc070 cc075 cc071 cc070 cc076 cc073 cc071 cc070
cc149 cc075 cc113 cc074 cc070
cc094 cc070 cc071 cc070 cc070 cc070
cc070 cc072 cc070 cc070 cc070
cc070 cc070 cc070 cc073 cc070
cc070 cc076 cc070 cc085 cc070 cc070 cc070 cc072 cc070
cc071 cc070 cc070 cc072 cc072 cc125 cc027 cc048 cc147
cc071 cc079 cc070 cc027 cc048 cc070 cc071 cc094 cc070
cc070 cc070 cc070 cc077 cc071 cc070
cc071 cc070 cc070 cc071 cc071 cc071 cc070 cc072 cc071
cc077 cc070 cc072 cc043 cc045
cc070 cc070 cc071 cc071 cc070 cc071
cc071 cc071 cc070 cc149 cc055 cc041
cc070 cc074 cc080 cc072 cc073 cc070 cc070 cc070
cc071 cc070 cc070 cc087 cc149 cc070 cc063 cc028
cc072 cc070 cc072 cc043 cc045 cc070
cc027 cc048 cc149 cc078 cc070
cc070 cc074 cc071 cc072 cc093 cc074 cc072
cc097 cc070 cc070 cc024 cc025 cc071 cc070
cc070 cc070 cc087 cc070 cc074 cc070 cc075 cc149
cc070 cc073 cc070 cc070 cc070
cc070 cc070 cc072 cc079 cc070 cc070 cc043 cc045 cc077
cc070 cc072 cc071 cc071 cc055 cc041
cc071 cc081 cc070 cc149 cc053 cc062
cc071 cc073 cc073 cc073 cc082 cc070 cc071 cc072
cc027 cc048 cc082 cc070 cc072 cc073 cc149
cc073 cc070 cc070 cc095 cc073 cc149 cc070 cc075
cc084 cc149 cc070 cc106 cc070 cc070 cc071 cc149
cc074 cc063 cc028 cc149 cc071
cc075 cc070 cc043 cc045 cc071 cc072
cc074 cc074 cc104 cc074 cc070 cc070 cc103
cc070 cc074 cc076 cc070 cc071 cc071 cc070
cc070 cc070 cc063 cc028 cc070
cc070 cc071 cc070 cc070 cc082
cc070 cc070 cc053 cc035 cc071 cc071
cc070 cc070 cc079 cc082 cc073 cc073 cc070 cc043 cc045
cc072 cc070 cc071 cc071 cc108 cc122 cc074 cc097
cc070 cc071 cc070 cc070 cc071 cc075 cc070
cc073 cc071 cc079 cc070 cc134 cc137 cc120 cc070 cc071
cc101 cc072 cc070 cc079 cc070 cc083 cc072 cc089
cc072 cc075 cc099 cc070 cc073 cc070 cc070
cc071 cc071 cc071 cc070 cc070 cc070 cc070
cc070 cc070 cc071 cc101 cc118
cc071 cc070 cc070 cc070 cc078 cc070
cc070 cc077 cc083 cc071 cc070 cc149 cc119 cc053 cc035
cc070 cc072 cc072 cc071 cc070 cc082 cc070 cc070
cc070 cc070 cc149 cc070 cc130 cc110
cc072 cc071 cc079 cc053 cc035 cc093 cc073 cc070
cc071 cc076 cc070 cc072 cc139 cc126 cc114
cc149 cc070 cc070 cc149 cc076
cc133 cc071 cc070 cc072 cc070 cc070 cc071
cc072 cc070 cc072 cc070 cc070 cc070 cc070 cc070
cc072 cc070 cc070 cc078 cc070 cc071
cc072 cc070 cc124 cc114 cc101 cc070 cc072
cc071 cc127 cc122 cc100 cc070 cc070 cc070 cc103
cc070 cc096 cc070 cc127 cc122 cc100 cc070 cc070
cc089 cc071 cc070 cc070 cc070 cc075 cc149
cc075 cc075 cc149 cc071 cc071 cc070 cc070 cc080
cc086 cc070 cc076 cc072 cc071
cc070 cc072 cc074 cc149 cc149 cc149 cc071 cc070 cc070
cc070 cc070 cc091 cc071 cc078 cc070 cc070
cc073 cc071 cc139 cc126 cc114 cc070 cc075 cc071 cc090
cc070 cc149 cc070 cc124 cc114
cc070 cc070 cc076 cc071 cc080 cc070 cc074 cc053 cc062
cc070 cc070 cc071 cc072 cc070 cc071 cc070 cc082 cc072
cc070 cc081 cc101 cc115 cc070 cc078 cc070
cc070 cc071 cc072 cc070 cc070 cc096 cc053 cc035
cc070 cc074 cc071 cc070 cc070
cc070 cc070 cc119 cc121 cc104 cc125 cc071 cc071 cc075
cc070 cc089 cc071 cc071 cc070 cc071 cc070
cc099 cc079 cc070 cc124 cc116 cc070 cc070
cc071 cc071 cc076 cc080 cc070
cc070 cc070 cc070 cc070 cc070
cc074 cc134 cc137 cc120 cc080 cc096 cc076 cc071
cc070 cc070 cc071 cc071 cc072 cc079 cc070 cc091 cc070
cc070 cc072 cc149 cc071 cc071 cc070
cc070 cc071 cc070 cc053 cc062 cc073 cc070 cc072
cc071 cc149 cc070 cc098 cc071 cc074 cc071
cc070 cc071 cc074 cc070 cc070 cc071 cc070 cc149 cc142
cc070 cc071 cc070 cc139 cc126 cc114
cc070 cc070 cc135 cc117 cc138 cc073 cc070
cc070 cc070 cc070 cc085 cc070 cc070 cc070 cc072 cc070
cc124 cc114 cc070 cc070 cc070 cc102
cc071 cc087 cc139 cc126 cc114 cc117 cc071 cc070 cc071
cc071 cc072 cc070 cc080 cc074
cc070 cc127 cc122 cc100 cc073 cc070 cc093 cc071
cc103 cc137 cc073 cc070 cc070 cc070 cc070 cc070
cc130 cc110 cc073 cc143 cc070
cc079 cc081 cc070 cc139 cc126 cc114 cc071 cc071
cc071 cc071 cc070 cc078 cc072 cc139 cc126 cc114 cc070
cc104 cc071 cc070 cc070 cc093 cc070 cc070 cc124 cc116
cc072 cc070 cc070 cc074 cc075 cc071 cc072
cc149 cc149 cc070 cc077 cc053 cc035 cc073 cc070
cc070 cc071 cc082 cc070 cc070 cc070
cc149 cc072 cc070 cc073 cc077
cc070 cc101 cc118 cc072 cc071
cc071 cc149 cc071 cc124 cc116 cc071 cc070
cc149 cc149 cc144 cc124 cc116
cc070 cc070 cc072 cc070 cc107 cc070 cc070 cc074 cc070
cc073 cc070 cc149 cc070 cc070 cc097 cc070 cc070 cc070
cc070 cc070 cc149 cc095 cc071 cc070 cc112 cc070 cc071
cc070 cc074 cc070 cc070 cc073 cc070
cc134 cc137 cc120 cc132 cc070
cc070 cc070 cc070 cc101 cc115 cc070 cc071 cc096 cc071
cc070 cc070 cc120 cc099 cc071 cc125 cc107 cc100 cc070
cc070 cc088 cc075 cc072 cc070 cc101 cc115 cc070
cc070 cc149 cc135 cc117 cc138 cc072 cc070 cc149
cc077 cc070 cc070 cc070 cc071 cc070 cc073 cc073
cc091 cc082 cc149 cc070 cc101 cc115 cc149 cc070 cc074
cc070 cc102 cc118 cc138 cc070 cc074 cc070
cc134 cc137 cc120 cc073 cc071 cc070 cc073
cc134 cc137 cc120 cc149 cc070
cc070 cc073 cc070 cc115 cc079 cc125 cc107 cc100 cc073
cc070 cc074 cc070 cc101 cc118
cc070 cc084 cc070 cc070 cc070
cc071 cc070 cc101 cc115 cc070 cc077 cc070 cc070
cc070 cc101 cc118 cc149 cc078
cc133 cc070 cc072 cc075 cc070 cc070 cc073 cc149
cc093 cc073 cc149 cc071 cc075 cc072 cc070
cc070 cc070 cc114 cc084 cc079 cc072 cc149 cc149 cc070
cc071 cc075 cc070 cc070 cc070 cc070 cc070 cc070
cc070 cc076 cc102 cc118 cc138 cc070
cc053 cc035 cc070 cc149 cc080 cc071 cc084
cc070 cc146 cc125 cc107 cc100
cc070 cc071 cc105 cc070 cc070 cc070
cc134 cc137 cc120 cc072 cc070 cc149 cc072
cc070 cc130 cc071 cc070 cc070 cc074 cc072
cc070 cc070 cc070 cc070 cc070 cc074 cc149
cc074 cc070 cc084 cc081 cc071 cc070
cc139 cc126 cc114 cc072 cc071 cc070
cc070 cc071 cc125 cc107 cc100 cc071 cc070 cc070
cc071 cc072 cc053 cc062 cc070 cc070
cc070 cc134 cc137 cc120 cc070 cc070 cc070 cc120 cc070
cc081 cc127 cc122 cc100 cc071 cc072 cc070
cc135 cc070 cc071 cc073 cc072 cc071 cc071 cc077
cc073 cc101 cc118 cc070 cc070 cc070
cc070 cc070 cc072 cc072 cc115 cc080
cc070 cc072 cc070 cc079 cc070
cc070 cc070 cc070 cc070 cc084 cc075
cc076 cc070 cc070 cc071 cc070 cc092
cc070 cc072 cc070 cc071 cc070 cc053 cc062
cc071 cc070 cc070 cc130 cc110 cc070 cc071 cc070
cc127 cc122 cc100 cc072 cc099 cc071 cc070
cc070 cc053 cc035 cc117 cc085 cc070
cc070 cc071 cc070 cc077 cc070 cc098 cc128
cc071 cc074 cc070 cc070 cc070 cc070 cc079
cc072 cc075 cc124 cc114 cc070 cc072 cc141 cc072
cc079 cc070 cc072 cc070 cc074 cc070
cc134 cc137 cc120 cc070 cc072 cc071 cc077 cc073
cc149 cc087 cc070 cc074 cc070
cc070 cc070 cc074 cc072 cc070 cc070 cc082 cc071 cc112
cc070 cc070 cc070 cc137 cc073 cc072 cc076
cc070 cc077 cc070 cc084 cc072
cc070 cc070 cc071 cc101 cc115 cc070 cc070
cc075 cc072 cc070 cc070 cc070
cc070 cc071 cc073 cc074 cc070 cc084 cc070 cc149 cc071
cc083 cc070 cc070 cc070 cc071 cc070 cc071 cc079 cc070
cc134 cc137 cc120 cc071 cc085
cc070 cc070 cc149 cc090 cc125
cc070 cc070 cc071 cc149 cc078 cc101
cc071 cc071 cc073 cc070 cc070 cc081 cc070 cc087
cc071 cc070 cc072 cc070 cc070 cc076 cc070 cc070
cc070 cc073 cc072 cc070 cc070
cc070 cc071 cc071 cc149 cc079 cc085
cc076 cc070 cc070 cc071 cc070 cc073 cc077 cc072
cc070 cc070 cc070 cc147 cc070 cc073
cc135 cc117 cc138 cc070 cc076 cc070 cc072
cc077 cc071 cc070 cc070 cc070 cc070
cc101 cc115 cc136 cc070 cc073 cc071 cc071
cc077 cc070 cc070 cc108 cc122 cc084 cc076
cc070 cc070 cc080 cc071 cc102 cc118 cc138
cc070 cc080 cc104 cc149 cc082 cc076 cc070
cc083 cc102 cc118 cc138 cc071 cc070
cc070 cc070 cc070 cc083 cc149 cc070 cc071 cc071 cc073
cc070 cc070 cc149 cc071 cc071 cc070 cc071 cc071
cc053 cc062 cc079 cc070 cc097 cc070 cc070 cc079 cc149
