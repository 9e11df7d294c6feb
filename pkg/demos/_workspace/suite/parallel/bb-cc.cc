cc074 cc078 cc070 cc072 cc072 cc071
cc073 cc072 cc070 cc070 cc070 cc099
cc125 cc107 cc100 cc070 cc074
cc149 cc092 cc070 cc071 cc070 cc070
cc070 cc070 cc125 cc107 cc100 cc072 cc070 cc074 cc072
cc073 cc097 cc070 cc063 cc028
cc070 cc080 cc071 cc076 cc071
cc072 cc070 cc070 cc070 cc070 cc070 cc070 cc071
cc070 cc075 cc073 cc109 cc121 cc104 cc125 cc070
cc070 cc135 cc117 cc138 cc112 cc070 cc077 cc091
cc070 cc070 cc071 cc070 cc070 cc121 cc104 cc125 cc073
cc072 cc070 cc070 cc070 cc071 cc072 cc070
cc072 cc070 cc149 cc070 cc070 cc071 cc072 cc070
cc070 cc149 cc070 cc071 cc070
cc072 cc071 cc073 cc071 cc074 cc070 cc070
cc070 cc072 cc070 cc091 cc076 cc072 cc070 cc071
cc071 cc077 cc070 cc079 cc070 cc130 cc110
cc070 cc070 cc073 cc087 cc070 cc070 cc068 cc061
cc124 cc114 cc075 cc071 cc103 cc073 cc070
cc098 cc124 cc131 cc075 cc074 cc070 cc070
cc070 cc070 cc071 cc076 cc076
cc108 cc071 cc070 cc075 cc098 cc071 cc070 cc084
cc070 cc087 cc072 cc070 cc075 cc078
cc070 cc024 cc025 cc070 cc070 cc070 cc070
cc149 cc072 cc117 cc070 cc070 cc070
cc071 cc084 cc102 cc118 cc138
cc073 cc070 cc072 cc070 cc149
cc071 cc149 cc141 cc073 cc071 cc070 cc074 cc070
cc070 cc070 cc073 cc055 cc041 cc071 cc078 cc071
cc070 cc071 cc070 cc072 cc070 cc070
cc070 cc071 cc084 cc070 cc071 cc070 cc070 cc070
cc070 cc071 cc079 cc088 cc070 cc074 cc071 cc074 cc071
cc115 cc100 cc149 cc068 cc061 cc104 cc070
cc134 cc137 cc120 cc149 cc080 cc149 cc148
cc080 cc072 cc149 cc105 cc071
cc070 cc070 cc149 cc078 cc070 cc093 cc070
cc073 cc149 cc080 cc053 cc035 cc070 cc077 cc149 cc106
cc070 cc070 cc070 cc130 cc070 cc072 cc071
cc063 cc028 cc070 cc112 cc072
cc077 cc070 cc071 cc070 cc070
cc110 cc090 cc070 cc053 cc035 cc075
cc149 cc070 cc149 cc071 cc074 cc130 cc110 cc087
cc073 cc149 cc077 cc070 cc070 cc149 cc070 cc070 cc070
cc070 cc070 cc142 cc043 cc045 cc077 cc072 cc072
cc070 cc074 cc070 cc072 cc076 cc081 cc071
cc070 cc070 cc146 cc070 cc078 cc085
cc073 cc072 cc070 cc149 cc072
cc121 cc104 cc125 cc107 cc070 cc149 cc084 cc070
cc074 cc071 cc070 cc070 cc084 cc070 cc071 cc071
cc076 cc074 cc077 cc108 cc070
cc070 cc076 cc063 cc028 cc070 cc083 cc073 cc078 cc100
cc085 cc070 cc149 cc149 cc072 cc074 cc071
cc070 cc112 cc070 cc070 cc070 cc074
cc070 cc073 cc086 cc070 cc071 cc070 cc070 cc085 cc149
cc072 cc070 cc080 cc070 cc070
cc070 cc124 cc114 cc070 cc070
cc070 cc070 cc140 cc071 cc121 cc104 cc125 cc070
cc070 cc098 cc072 cc070 cc073 cc093 cc149 cc027 cc048
cc071 cc070 cc072 cc084 cc070 cc070 cc070 cc070
cc092 cc149 cc073 cc070 cc077 cc086 cc072 cc071
cc149 cc070 cc070 cc076 cc072 cc070 cc072
cc072 cc070 cc071 cc083 cc070 cc070 cc070 cc070 cc077
cc070 cc149 cc070 cc072 cc071 cc070 cc072 cc071
cc070 cc070 cc071 cc070 cc115 cc071 cc071 cc072
cc071 cc070 cc071 cc149 cc070 cc070 cc072
cc070 cc070 cc070 cc070 cc080
cc070 cc130 cc110 cc070 cc072 cc086 cc113 cc070
cc149 cc071 cc070 cc053 cc035 cc071 cc071 cc071
cc071 cc122 cc077 cc070 cc071
cc071 cc075 cc070 cc072 cc090 cc070 cc070
cc070 cc027 cc048 cc070 cc079
cc125 cc107 cc100 cc072 cc070 cc072
cc070 cc071 cc086 cc072 cc149 cc072 cc070 cc053 cc035
cc074 cc070 cc070 cc149 cc115 cc149 cc071 cc070
cc070 cc053 cc035 cc070 cc070
cc070 cc070 cc070 cc070 cc072 cc074 cc073
cc070 cc070 cc070 cc079 cc149 cc075 cc071 cc149
cc076 cc070 cc071 cc070 cc103 cc137 cc080 cc070 cc072
cc092 cc070 cc071 cc070 cc070 cc070 cc135 cc117 cc138
cc143 cc086 cc070 cc070 cc071 cc071 cc070
cc070 cc070 cc149 cc070 cc070
cc071 cc114 cc123 cc072 cc070
cc075 cc070 cc076 cc072 cc071 cc071 cc072 cc103 cc070
cc070 cc073 cc071 cc071 cc070
cc072 cc070 cc055 cc041 cc070 cc073 cc085 cc072 cc070
cc095 cc072 cc073 cc070 cc063 cc028 cc078 cc111
cc024 cc025 cc071 cc071 cc072 cc149 cc071 cc070 cc149
cc101 cc070 cc070 cc070 cc071 cc070
cc072 cc071 cc070 cc071 cc082
cc071 cc068 cc061 cc074 cc070
cc070 cc072 cc071 cc071 cc071 cc070
cc071 cc073 cc149 cc124 cc114
cc102 cc118 cc138 cc071 cc070
cc070 cc103 cc137 cc072 cc073 cc073
cc070 cc071 cc070 cc070 cc071 cc071 cc071 cc079 cc072
cc075 cc070 cc070 cc070 cc070 cc124 cc114 cc070
cc074 cc053 cc035 cc070 cc074 cc081 cc149 cc070 cc070
cc070 cc084 cc149 cc070 cc071
cc074 cc070 cc068 cc061 cc070 cc073 cc072 cc116 cc071
cc070 cc079 cc072 cc024 cc025 cc070
cc071 cc076 cc070 cc070 cc070 cc071 cc070 cc070 cc074
cc070 cc027 cc048 cc070 cc121
cc087 cc070 cc072 cc070 cc072 cc070 cc070 cc076
cc071 cc149 cc070 cc070 cc073 cc071 cc070 cc079
cc105 cc073 cc111 cc071 cc070 cc070 cc070
cc070 cc070 cc070 cc053 cc062 cc071 cc085
cc134 cc071 cc087 cc074 cc124 cc114 cc070 cc149 cc071
cc102 cc118 cc138 cc072 cc079 cc072 cc119
cc070 cc070 cc070 cc078 cc070 cc078 cc071 cc126 cc071
cc071 cc070 cc074 cc072 cc070 cc070 cc077 cc149
cc123 cc070 cc074 cc078 cc125 cc107 cc100
cc149 cc127 cc070 cc070 cc071 cc071 cc149
cc073 cc085 cc068 cc061 cc070 cc074
cc024 cc025 cc071 cc074 cc071 cc071 cc082
cc071 cc070 cc149 cc070 cc070 cc070
cc070 cc070 cc071 cc073 cc070
cc070 cc124 cc114 cc070 cc103 cc077 cc149 cc071 cc070
cc149 cc070 cc135 cc117 cc138 cc073 cc071
cc070 cc070 cc125 cc107 cc100 cc070
cc027 cc048 cc070 cc115 cc149 cc071 cc073 cc077 cc071
cc072 cc070 cc070 cc071 cc082
cc071 cc070 cc072 cc083 cc129 cc080
cc077 cc073 cc070 cc070 cc070 cc070 cc077 cc071 cc070
cc073 cc070 cc084 cc024 cc025
cc070 cc072 cc070 cc087 cc070 cc071 cc070 cc070
cc070 cc124 cc114 cc075 cc071 cc070
cc072 cc070 cc070 cc070 cc075 cc070 cc070
cc071 cc070 cc053 cc062 cc072 cc071 cc070 cc149 cc071
cc070 cc070 cc075 cc070 cc070 cc070 cc083 cc070
cc070 cc024 cc025 cc070 cc078
cc070 cc071 cc070 cc135 cc117 cc138
cc070 cc073 cc087 cc070 cc070 cc071 cc096
cc071 cc149 cc071 cc091 cc149 cc071 cc072 cc092 cc073
cc070 cc070 cc071 cc130 cc110
cc071 cc070 cc094 cc070 cc083
cc099 cc089 cc094 cc070 cc070 cc070
cc071 cc070 cc071 cc070 cc072 cc072 cc074
cc071 cc071 cc070 cc070 cc074
cc070 cc070 cc077 cc136 cc071 cc070
cc121 cc083 cc070 cc070 cc146
cc073 cc071 cc071 cc073 cc071 cc098 cc087
cc070 cc070 cc071 cc070 cc071 cc068 cc061
cc071 cc053 cc062 cc071 cc070
cc055 cc041 cc070 cc070 cc070 cc071 cc070 cc070 cc087
cc072 cc073 cc070 cc070 cc068 cc061 cc071 cc070 cc095
cc071 cc070 cc071 cc076 cc070 cc070 cc074 cc071 cc076
cc073 cc070 cc070 cc070 cc071 cc070 cc078 cc090
cc073 cc070 cc074 cc070 cc090 cc070
cc071 cc072 cc070 cc024 cc025 cc070 cc070
cc055 cc041 cc070 cc070 cc071
cc078 cc024 cc025 cc073 cc071 cc070 cc072 cc072 cc070
cc070 cc070 cc075 cc070 cc077 cc055 cc041
cc080 cc070 cc070 cc149 cc073 cc076 cc071 cc084
cc070 cc027 cc048 cc073 cc071 cc071 cc071
cc070 cc073 cc043 cc045 cc072
cc073 cc070 cc043 cc045 cc070 cc149 cc071
cc024 cc025 cc071 cc074 cc070 cc070 cc082
cc070 cc149 cc070 cc070 cc074 cc070
cc068 cc061 cc071 cc071 cc070 cc090 cc071 cc070
cc070 cc063 cc028 cc070 cc070 cc070 cc072 cc071
cc070 cc072 cc074 cc072 cc149 cc070 cc070 cc149 cc072
cc070 cc074 cc074 cc070 cc110 cc071 cc027 cc048 cc070
cc071 cc070 cc070 cc071 cc071 cc070 cc070 cc081 cc070
cc077 cc071 cc070 cc070 cc070 cc053 cc035
cc053 cc035 cc098 cc071 cc074 cc074 cc076 cc073 cc077
cc070 cc072 cc149 cc070 cc071 cc071 cc070 cc071 cc073
cc081 cc071 cc070 cc073 cc124 cc071 cc070 cc070 cc073
cc149 cc070 cc070 cc071 cc070 cc070 cc074 cc070 cc070
cc070 cc090 cc070 cc071 cc070 cc070
cc072 cc073 cc072 cc070 cc072 cc070 cc149
cc070 cc070 cc070 cc072 cc074
cc070 cc149 cc072 cc070 cc070 cc074 cc070
cc149 cc073 cc078 cc074 cc043 cc045 cc071 cc070
cc071 cc070 cc071 cc070 cc089 cc070 cc149
cc043 cc045 cc071 cc073 cc070 cc070 cc071
cc149 cc070 cc081 cc071 cc053 cc035 cc070
cc075 cc076 cc149 cc083 cc075 cc043 cc045 cc079
cc070 cc070 cc070 cc070 cc071 cc093 cc072 cc070
cc149 cc070 cc149 cc063 cc028 cc077 cc149 cc070
cc070 cc072 cc072 cc070 cc070 cc090 cc070
cc071 cc070 cc149 cc070 cc070 cc080
cc079 cc072 cc070 cc070 cc075
cc074 cc149 cc076 cc113 cc070 cc075 cc068 cc061 cc075
cc073 cc070 cc077 cc073 cc070 cc070 cc070 cc053 cc035
cc082 cc070 cc071 cc063 cc028 cc071 cc090
cc070 cc072 cc071 cc070 cc077 cc070
cc053 cc035 cc070 cc070 cc149 cc149
cc073 cc070 cc070 cc070 cc076 cc098 cc149 cc053 cc062
cc070 cc072 cc085 cc053 cc035 cc074
cc071 cc073 cc070 cc070 cc070 cc084
cc073 cc071 cc114 cc070 cc070 cc070 cc070 cc070 cc070
cc071 cc070 cc070 cc070 cc149 cc053 cc035 cc070
cc070 cc070 cc072 cc120 cc070 cc055 cc041
cc149 cc072 cc070 cc070 cc073 cc070 cc070 cc076 cc070
cc090 cc070 cc071 cc070 cc070 cc070 cc070 cc070 cc070
cc071 cc053 cc035 cc070 cc071
cc074 cc070 cc070 cc070 cc075 cc103 cc070 cc073
cc097 cc075 cc071 cc076 cc070 cc070 cc071 cc073 cc075
cc095 cc070 cc070 cc070 cc070 cc070 cc070 cc149 cc149
cc071 cc087 cc053 cc035 cc070
cc081 cc073 cc072 cc073 cc149 cc070
cc070 cc070 cc043 cc045 cc071 cc070 cc070
cc075 cc070 cc071 cc149 cc101 cc079
cc070 cc149 cc075 cc070 cc070 cc072 cc043 cc045
cc080 cc076 cc070 cc074 cc077 cc070 cc070
cc070 cc073 cc070 cc070 cc070 cc070 cc082 cc071
cc072 cc071 cc070 cc072 cc117 cc149 cc077 cc071
cc070 cc070 cc024 cc025 cc075 cc072 cc073 cc071 cc070
cc043 cc045 cc070 cc126 cc076
cc070 cc072 cc070 cc070 cc070 cc068 cc061 cc070
cc149 cc078 cc149 cc149 cc071
cc071 cc027 cc048 cc082 cc070 cc084 cc070 cc072 cc071
cc106 cc071 cc070 cc072 cc077 cc070
cc071 cc070 cc070 cc149 cc068 cc061 cc076 cc072
cc075 cc071 cc086 cc072 cc070 cc070 cc071 cc070 cc082
cc099 cc070 cc070 cc070 cc071
cc063 cc028 cc088 cc100 cc149 cc070
cc070 cc070 cc070 cc070 cc073
cc071 cc073 cc070 cc070 cc073 cc072 cc070
cc071 cc070 cc093 cc068 cc061 cc070 cc070 cc073 cc070
cc074 cc070 cc070 cc076 cc076 cc149 cc149 cc072 cc072
cc024 cc025 cc079 cc070 cc115
cc063 cc028 cc149 cc070 cc071 cc071 cc149 cc070
cc070 cc070 cc070 cc070 cc074 cc072 cc070 cc070 cc077
cc043 cc045 cc070 cc103 cc070 cc071 cc078 cc070
cc070 cc071 cc070 cc071 cc070 cc070 cc070 cc076 cc071
cc070 cc076 cc081 cc070 cc071
cc070 cc082 cc075 cc070 cc070 cc072 cc074
cc075 cc070 cc070 cc149 cc071 cc073 cc024 cc025 cc074
cc072 cc070 cc071 cc070 cc074 cc070 cc075 cc070
cc071 cc053 cc062 cc070 cc076 cc073 cc149
cc070 cc071 cc071 cc070 cc076
cc070 cc079 cc070 cc085 cc073 cc071 cc132 cc070 cc082
cc070 cc070 cc070 cc073 cc070 cc070 cc070 cc071 cc075
cc094 cc071 cc121 cc027 cc048 cc149
cc070 cc071 cc070 cc093 cc070
cc071 cc070 cc070 cc070 cc124 cc070 cc070 cc078
cc073 cc074 cc070 cc070 cc027 cc048
cc149 cc070 cc071 cc070 cc071 cc070 cc070
cc072 cc068 cc061 cc070 cc071 cc072 cc079
cc077 cc070 cc070 cc068 cc061 cc083
cc071 cc072 cc053 cc035 cc071 cc072 cc070
cc075 cc071 cc071 cc024 cc025 cc071 cc076
cc076 cc081 cc074 cc073 cc071 cc053 cc035
cc085 cc070 cc070 cc027 cc048 cc070
cc073 cc073 cc070 cc071 cc082 cc053 cc035
cc070 cc055 cc041 cc076 cc075 cc074 cc071
cc075 cc087 cc149 cc055 cc041 cc070
cc075 cc072 cc072 cc072 cc070 cc082 cc070
cc075 cc027 cc048 cc129 cc095
cc072 cc070 cc055 cc041 cc070
cc070 cc070 cc070 cc071 cc070
cc149 cc071 cc093 cc070 cc073 cc070
cc070 cc149 cc070 cc070 cc068 cc061 cc075 cc080
cc073 cc071 cc071 cc070 cc076 cc073 cc070
cc112 cc070 cc075 cc149 cc070 cc070 cc070 cc070 cc070
cc072 cc071 cc070 cc072 cc070 cc076 cc053 cc035 cc083
cc072 cc070 cc070 cc070 cc074 cc071
cc075 cc070 cc043 cc045 cc088 cc070 cc070
cc071 cc070 cc070 cc070 cc070 cc070 cc071 cc074
cc071 cc070 cc078 cc084 cc072 cc072
cc070 cc024 cc025 cc072 cc070 cc073 cc072 cc070 cc073
cc070 cc070 cc075 cc072 cc071 cc070
cc071 cc070 cc080 cc070 cc073 cc073 cc053 cc062 cc073
cc070 cc070 cc149 cc070 cc076 cc070 cc070 cc087 cc070
cc082 cc090 cc055 cc041 cc072
cc070 cc092 cc070 cc072 cc070
cc070 cc081 cc070 cc072 cc070 cc070 cc071 cc072 cc070
cc070 cc095 cc070 cc070 cc053 cc062 cc114 cc072
cc070 cc070 cc070 cc070 cc149
cc072 cc071 cc149 cc071 cc071 cc149 cc070 cc074
cc081 cc080 cc111 cc063 cc028 cc070
cc070 cc070 cc077 cc095 cc149 cc101 cc070 cc070
cc149 cc070 cc070 cc055 cc041 cc071 cc070
cc149 cc070 cc071 cc068 cc061 cc070
cc070 cc074 cc070 cc071 cc089 cc070 cc070 cc070
cc071 cc079 cc074 cc070 cc070 cc070
cc070 cc089 cc070 cc063 cc028
cc070 cc072 cc070 cc070 cc070 cc090 cc071 cc070
cc086 cc071 cc070 cc070 cc071 cc085 cc070
