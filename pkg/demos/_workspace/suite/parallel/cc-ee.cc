cc073 cc071 cc127 cc083 cc115 cc070 cc071
cc070 cc070 cc077 cc105 cc071 cc070 cc076 cc072
cc070 cc070 cc085 cc076 cc071 cc068 cc061
cc053 cc062 cc072 cc070 cc088 cc070 cc070 cc073
cc149 cc070 cc071 cc070 cc070 cc073
cc074 cc070 cc081 cc112 cc088 cc070
cc149 cc070 cc114 cc055 cc041 cc070 cc070 cc072 cc070
cc072 cc073 cc070 cc070 cc071 cc070 cc070 cc071 cc070
cc088 cc070 cc070 cc070 cc073 cc072 cc070
cc070 cc070 cc119 cc070 cc071 cc089
cc082 cc070 cc076 cc071 cc070 cc070 cc079
cc071 cc091 cc071 cc123 cc149 cc072
cc070 cc071 cc070 cc072 cc077 cc071 cc070 cc071
cc075 cc072 cc063 cc028 cc070 cc070 cc070 cc073
cc071 cc072 cc070 cc094 cc070 cc149 cc070 cc124
cc070 cc076 cc070 cc071 cc068 cc061 cc073 cc072 cc074
cc070 cc070 cc070 cc053 cc035 cc070 cc070
cc091 cc073 cc072 cc070 cc070 cc149 cc072 cc024 cc025
cc070 cc073 cc104 cc024 cc025
cc070 cc063 cc028 cc149 cc077 cc070 cc070
cc070 cc068 cc061 cc070 cc072 cc070
cc070 cc070 cc070 cc149 cc071 cc070 cc082 cc070 cc070
cc072 cc070 cc093 cc072 cc080
cc084 cc071 cc084 cc071 cc070 cc072 cc072
cc076 cc149 cc147 cc027 cc048 cc071 cc070
cc070 cc072 cc070 cc082 cc070 cc081 cc070 cc070
cc070 cc070 cc074 cc072 cc149 cc124 cc076
cc070 cc071 cc130 cc070 cc077 cc074 cc074 cc070
cc115 cc074 cc070 cc072 cc149 cc070 cc072
cc077 cc098 cc094 cc070 cc024 cc025
cc072 cc070 cc071 cc043 cc045 cc072 cc071 cc070 cc070
cc071 cc071 cc070 cc072 cc070
cc070 cc078 cc024 cc025 cc076 cc070 cc080
cc149 cc070 cc053 cc035 cc077 cc108 cc070 cc095 cc070
cc070 cc072 cc073 cc070 cc079 cc074 cc070 cc070
cc072 cc072 cc078 cc070 cc070
cc072 cc078 cc070 cc070 cc070 cc073 cc070 cc070 cc073
cc070 cc043 cc045 cc073 cc074
cc089 cc070 cc063 cc028 cc075 cc070
cc070 cc071 cc070 cc070 cc070
cc074 cc070 cc071 cc070 cc070 cc070 cc043 cc045 cc070
cc070 cc070 cc027 cc048 cc070 cc070
cc072 cc070 cc083 cc070 cc070
cc078 cc149 cc070 cc138 cc070
cc072 cc053 cc035 cc070 cc071 cc070 cc070 cc074 cc070
cc092 cc071 cc070 cc070 cc070
cc149 cc070 cc074 cc070 cc070 cc053 cc035
cc079 cc082 cc077 cc086 cc079 cc089 cc138 cc070
cc070 cc070 cc070 cc027 cc048 cc072 cc070
cc113 cc043 cc045 cc070 cc075
cc075 cc070 cc070 cc070 cc070 cc024 cc025 cc139
cc053 cc062 cc070 cc072 cc076 cc072 cc081 cc113 cc073
cc071 cc097 cc083 cc070 cc070 cc071 cc070 cc073 cc132
cc053 cc035 cc070 cc070 cc070 cc070
cc077 cc070 cc071 cc070 cc070 cc079
cc080 cc053 cc035 cc149 cc071
cc070 cc071 cc071 cc070 cc070 cc027 cc048 cc070
cc075 cc070 cc070 cc043 cc045 cc070 cc070
cc070 cc149 cc071 cc070 cc073 cc070 cc073 cc070 cc070
cc070 cc053 cc062 cc081 cc070 cc071 cc070
cc070 cc027 cc048 cc073 cc070 cc070 cc080
cc070 cc070 cc076 cc071 cc077 cc070 cc074 cc105
cc070 cc070 cc070 cc070 cc053 cc062
cc079 cc073 cc070 cc073 cc072 cc070 cc024 cc025
cc072 cc072 cc149 cc055 cc041 cc149 cc076
cc071 cc070 cc027 cc048 cc073 cc070
cc070 cc131 cc075 cc087 cc070 cc070 cc083
cc078 cc053 cc035 cc070 cc071 cc071
cc070 cc070 cc077 cc072 cc071 cc071
cc071 cc070 cc070 cc070 cc070 cc073 cc149
cc070 cc053 cc035 cc073 cc071 cc070
cc070 cc070 cc070 cc070 cc070
cc071 cc070 cc072 cc053 cc062
cc070 cc087 cc104 cc071 cc070
cc070 cc081 cc079 cc076 cc072 cc070
cc071 cc071 cc070 cc072 cc071 cc071 cc070 cc070 cc077
cc074 cc070 cc072 cc070 cc043 cc045 cc084 cc070 cc070
cc070 cc072 cc071 cc070 cc077 cc076
cc071 cc072 cc071 cc070 cc070 cc070 cc070
cc063 cc028 cc070 cc073 cc070 cc075 cc074
cc072 cc072 cc072 cc078 cc071 cc070 cc073 cc070
cc070 cc100 cc070 cc070 cc076
cc070 cc070 cc149 cc070 cc070 cc149 cc063 cc028 cc070
cc070 cc072 cc070 cc082 cc077 cc070 cc076
cc070 cc126 cc149 cc071 cc149
cc070 cc070 cc070 cc149 cc078 cc143 cc070 cc070 cc070
cc063 cc028 cc070 cc075 cc070 cc070
cc071 cc080 cc138 cc076 cc070 cc070 cc072 cc070
cc074 cc070 cc077 cc084 cc024 cc025 cc073 cc149 cc070
cc070 cc083 cc075 cc149 cc070 cc077
cc070 cc070 cc074 cc070 cc070 cc070 cc073 cc072
cc070 cc070 cc070 cc070 cc072 cc074 cc080
cc072 cc093 cc071 cc149 cc070 cc072
cc097 cc071 cc070 cc070 cc070 cc149 cc070 cc074 cc070
cc070 cc071 cc126 cc071 cc055 cc041
cc063 cc028 cc072 cc071 cc140
cc071 cc070 cc074 cc122 cc070 cc070 cc070 cc070 cc070
cc070 cc024 cc025 cc149 cc071 cc070 cc075
cc075 cc074 cc063 cc028 cc072 cc071 cc071 cc091
cc071 cc072 cc072 cc075 cc078 cc080
cc072 cc071 cc072 cc070 cc053 cc062
cc073 cc071 cc043 cc045 cc147 cc073 cc104 cc070
cc071 cc119 cc093 cc070 cc111 cc071 cc070 cc089
cc070 cc072 cc072 cc071 cc071 cc074
cc072 cc072 cc070 cc099 cc070 cc070 cc086 cc071
cc071 cc072 cc070 cc070 cc070 cc070 cc076
cc070 cc071 cc080 cc071 cc070 cc072 cc070 cc070 cc071
cc100 cc070 cc072 cc149 cc070 cc027 cc048 cc070 cc083
cc143 cc149 cc043 cc045 cc070
cc070 cc070 cc072 cc072 cc075
cc068 cc061 cc070 cc070 cc070 cc070 cc149
cc070 cc070 cc075 cc070 cc070 cc071
cc074 cc082 cc077 cc070 cc024 cc025 cc070 cc070 cc076
cc118 cc074 cc100 cc070 cc070 cc073 cc076 cc073
cc074 cc149 cc070 cc080 cc140 cc070 cc075 cc070
cc072 cc070 cc070 cc070 cc070 cc043 cc045 cc149
cc070 cc070 cc070 cc070 cc070 cc070
cc072 cc117 cc149 cc070 cc071 cc068 cc061 cc071
cc071 cc055 cc041 cc082 cc071 cc071 cc070
cc071 cc070 cc085 cc073 cc070 cc077 cc086
cc071 cc074 cc073 cc071 cc149 cc070 cc078
cc070 cc075 cc070 cc078 cc068 cc061 cc070 cc070
cc070 cc103 cc070 cc075 cc072 cc071 cc074
cc070 cc070 cc070 cc084 cc071 cc070 cc055 cc041
cc149 cc024 cc025 cc071 cc072 cc081 cc072 cc071
cc070 cc070 cc070 cc070 cc105 cc072 cc055 cc041
cc071 cc072 cc071 cc070 cc024 cc025
cc070 cc071 cc072 cc076 cc073
cc149 cc070 cc024 cc025 cc072 cc070
cc104 cc070 cc070 cc071 cc075 cc070 cc027 cc048
cc070 cc071 cc070 cc077 cc055 cc041 cc070 cc070 cc084
cc078 cc073 cc027 cc048 cc070
cc070 cc073 cc075 cc071 cc070 cc055 cc041 cc070
cc073 cc070 cc072 cc070 cc053 cc062 cc070 cc070
cc070 cc070 cc043 cc045 cc086 cc072 cc070 cc072
cc071 cc076 cc083 cc063 cc028 cc070 cc070
cc070 cc070 cc071 cc071 cc075
cc070 cc074 cc070 cc070 cc081 cc071 cc073 cc073
cc083 cc149 cc070 cc073 cc070 cc024 cc025
cc070 cc070 cc043 cc045 cc070
cc070 cc070 cc071 cc089 cc070 cc070 cc078
cc108 cc122 cc070 cc070 cc070 cc074
cc124 cc114 cc101 cc149 cc070 cc072 cc070 cc073
cc072 cc070 cc071 cc116 cc135 cc134
cc074 cc070 cc070 cc072 cc080 cc070 cc070 cc073
cc099 cc070 cc116 cc135 cc134
cc070 cc070 cc091 cc070 cc070
cc070 cc070 cc071 cc070 cc070 cc072 cc072 cc073 cc072
cc070 cc070 cc071 cc078 cc070 cc070 cc070 cc095 cc074
cc072 cc070 cc149 cc077 cc072 cc070 cc071 cc070 cc070
cc071 cc130 cc110 cc149 cc078
cc070 cc070 cc071 cc086 cc070 cc086 cc073
cc070 cc134 cc137 cc120 cc070 cc071 cc071 cc075 cc088
cc070 cc070 cc149 cc070 cc073 cc147 cc072 cc070
cc073 cc071 cc070 cc070 cc149 cc093 cc070
cc070 cc071 cc134 cc137 cc120 cc119 cc070
cc072 cc070 cc075 cc149 cc076 cc077 cc070 cc070
cc072 cc083 cc124 cc116 cc072
cc096 cc149 cc117 cc070 cc073 cc070 cc073 cc108 cc122
cc072 cc070 cc070 cc071 cc071 cc070 cc070 cc070 cc070
cc149 cc070 cc074 cc070 cc071 cc072 cc149 cc071 cc086
cc072 cc070 cc103 cc134 cc137 cc120 cc070
cc070 cc071 cc124 cc114 cc070 cc070 cc070 cc070 cc073
cc071 cc071 cc073 cc070 cc070 cc070 cc070 cc071
cc070 cc079 cc070 cc072 cc070 cc070 cc070
cc070 cc070 cc071 cc070 cc149 cc070
cc070 cc070 cc070 cc127 cc122 cc100
cc070 cc070 cc070 cc070 cc077
cc070 cc070 cc071 cc072 cc077
cc070 cc081 cc085 cc078 cc070 cc070
cc127 cc070 cc089 cc070 cc070
cc070 cc112 cc070 cc070 cc072 cc082 cc070
cc100 cc101 cc115 cc121 cc070
cc070 cc099 cc070 cc072 cc072
cc080 cc071 cc070 cc070 cc108 cc122 cc079 cc070 cc070
cc071 cc070 cc111 cc070 cc070
cc070 cc072 cc070 cc079 cc073 cc074
cc070 cc093 cc070 cc071 cc070 cc070 cc070 cc074 cc070
cc101 cc118 cc076 cc098 cc070 cc070 cc070 cc071
cc070 cc070 cc070 cc124 cc116 cc149
cc071 cc070 cc071 cc070 cc070 cc134 cc137 cc120 cc070
cc091 cc072 cc070 cc149 cc070 cc093 cc111
cc083 cc070 cc070 cc091 cc073 cc103 cc137 cc132 cc070
cc070 cc074 cc124 cc114 cc075 cc070
cc070 cc116 cc149 cc071 cc070 cc070 cc071 cc125 cc070
cc070 cc142 cc070 cc072 cc070 cc089 cc074 cc070
cc075 cc072 cc071 cc079 cc070
cc079 cc130 cc110 cc070 cc072 cc070 cc073 cc081
cc070 cc111 cc093 cc070 cc081 cc070
cc070 cc071 cc073 cc101 cc118 cc070 cc077 cc070
cc072 cc108 cc122 cc072 cc071 cc070
cc072 cc078 cc071 cc149 cc095 cc108 cc122 cc070 cc106
cc071 cc071 cc078 cc071 cc130 cc110
cc070 cc070 cc072 cc149 cc071 cc083
cc127 cc122 cc100 cc070 cc074 cc070 cc070
cc071 cc101 cc118 cc070 cc070 cc070
cc072 cc074 cc098 cc070 cc127 cc122 cc100 cc073 cc071
cc070 cc070 cc071 cc070 cc070 cc125 cc107 cc100 cc070
cc080 cc090 cc124 cc116 cc070 cc090 cc070
cc149 cc070 cc071 cc134 cc137 cc120 cc070 cc077
cc070 cc074 cc070 cc073 cc070
cc084 cc070 cc140 cc112 cc101 cc118 cc070 cc070 cc070
cc116 cc135 cc134 cc070 cc075 cc070
cc108 cc122 cc070 cc071 cc070 cc149 cc071 cc072
cc072 cc072 cc078 cc071 cc070
cc070 cc071 cc142 cc092 cc070
cc072 cc072 cc081 cc072 cc071 cc076 cc149
cc116 cc070 cc070 cc134 cc137 cc120
cc070 cc072 cc103 cc137 cc070
cc101 cc118 cc071 cc070 cc071
cc070 cc074 cc075 cc124 cc114 cc070 cc072 cc072 cc077
cc073 cc084 cc071 cc071 cc070 cc070 cc070
cc073 cc125 cc107 cc100 cc080 cc072 cc070
cc070 cc070 cc070 cc072 cc070 cc073 cc070 cc103 cc071
cc076 cc071 cc101 cc115 cc072
cc072 cc070 cc078 cc149 cc081 cc072 cc076 cc149
cc139 cc126 cc114 cc079 cc071
cc077 cc072 cc073 cc070 cc070 cc070 cc076 cc070
cc074 cc125 cc107 cc100 cc070
cc070 cc075 cc070 cc072 cc071
cc130 cc070 cc070 cc070 cc082 cc084 cc089 cc149 cc098
cc077 cc074 cc149 cc070 cc074 cc086 cc071 cc071
cc070 cc070 cc083 cc132 cc073 cc116 cc135 cc134
cc121 cc104 cc125 cc099 cc070 cc071
cc070 cc072 cc084 cc071 cc103 cc137 cc070 cc070
cc071 cc076 cc074 cc125 cc107 cc100 cc080 cc073
cc070 cc070 cc070 cc078 cc070 cc070
cc104 cc071 cc074 cc149 cc072 cc090 cc072
cc070 cc075 cc083 cc075 cc070 cc085
cc071 cc070 cc070 cc071 cc079
cc070 cc072 cc070 cc072 cc072 cc070 cc070 cc149 cc081
cc130 cc110 cc100 cc070 cc071
cc070 cc108 cc122 cc070 cc070 cc082
cc124 cc114 cc078 cc074 cc071 cc072 cc076 cc070 cc082
cc071 cc070 cc070 cc071 cc070 cc070 cc073 cc070
cc095 cc070 cc075 cc103 cc076 cc070 cc126 cc084 cc070
cc071 cc070 cc127 cc122 cc100 cc070 cc070 cc070
cc122 cc082 cc070 cc070 cc077 cc070 cc079 cc075
cc070 cc070 cc070 cc070 cc072 cc070 cc100 cc070 cc070
cc071 cc072 cc075 cc139 cc126 cc114 cc070
cc075 cc071 cc071 cc070 cc070 cc133 cc074 cc070 cc070
cc081 cc071 cc125 cc107 cc100
cc072 cc108 cc083 cc075 cc071 cc070 cc099 cc070
cc072 cc080 cc070 cc070 cc079
cc075 cc101 cc118 cc079 cc070 cc070 cc070
cc149 cc149 cc073 cc070 cc070 cc076
cc071 cc121 cc104 cc125 cc071 cc149 cc099
cc070 cc070 cc070 cc070 cc149 cc077
cc071 cc070 cc070 cc070 cc070
cc070 cc134 cc137 cc120 cc070 cc070 cc070
cc070 cc089 cc070 cc070 cc070 cc121 cc104 cc125
cc070 cc131 cc074 cc087 cc072
cc124 cc116 cc070 cc071 cc070 cc073
cc074 cc072 cc071 cc090 cc077 cc070 cc071 cc070
cc070 cc100 cc071 cc072 cc075 cc127 cc122 cc100
cc070 cc149 cc070 cc102 cc118 cc138
cc073 cc077 cc108 cc122 cc070 cc070
cc125 cc107 cc100 cc071 cc072 cc098 cc071
cc072 cc077 cc070 cc070 cc071 cc070 cc070 cc070 cc149
cc071 cc101 cc118 cc149 cc149 cc149 cc070
cc071 cc070 cc092 cc103 cc137 cc070 cc071
cc081 cc127 cc122 cc100 cc082 cc070
cc070 cc092 cc070 cc149 cc070 cc072 cc072 cc070
cc070 cc073 cc072 cc108 cc070 cc071 cc072 cc084
cc073 cc079 cc070 cc070 cc101 cc118
cc070 cc088 cc079 cc073 cc071 cc070 cc070 cc083 cc071
cc070 cc070 cc076 cc149 cc071 cc070
cc070 cc072 cc073 cc070 cc092 cc106 cc070 cc072
cc070 cc086 cc149 cc082 cc070 cc149 cc073
cc070 cc070 cc070 cc070 cc071 cc074 cc070
cc070 cc070 cc074 cc071 cc070 cc070 cc071 cc071 cc071
cc070 cc070 cc072 cc073 cc071 cc070 cc070 cc081 cc072
cc071 cc088 cc091 cc071 cc070 cc070 cc080 cc070 cc149
cc071 cc077 cc070 cc077 cc070 cc147 cc125 cc107 cc100
cc119 cc103 cc137 cc071 cc070
cc074 cc073 cc071 cc143 cc070 cc070 cc115
cc077 cc149 cc092 cc130 cc110 cc149
cc102 cc118 cc138 cc070 cc070 cc149 cc082 cc149 cc129
cc080 cc070 cc070 cc071 cc125 cc107 cc100
cc072 cc070 cc072 cc070 cc070
