cc091 cc070 cc070 cc024 cc025 cc070 cc076 cc074 cc070
cc070 cc070 cc070 cc078 cc070
cc071 cc149 cc053 cc035 cc070 cc071 cc070
cc071 cc043 cc045 cc070 cc072 cc071 cc073 cc070 cc076
cc053 cc062 cc072 cc070 cc070
cc055 cc041 cc143 cc121 cc071 cc071 cc083
cc070 cc073 cc070 cc087 cc070 cc070 cc071 cc070
cc070 cc070 cc070 cc070 cc070
cc071 cc072 cc070 cc053 cc035 cc083 cc098
cc070 cc070 cc091 cc068 cc061
cc024 cc025 cc078 cc070 cc070 cc071 cc072
cc070 cc070 cc070 cc043 cc045 cc070 cc072 cc082
cc070 cc075 cc071 cc071 cc070 cc070 cc079
cc071 cc076 cc053 cc035 cc070 cc077 cc070
cc072 cc070 cc075 cc070 cc070 cc149 cc070 cc073 cc124
cc070 cc071 cc149 cc070 cc070 cc070 cc078 cc070
cc073 cc070 cc070 cc068 cc061
cc070 cc079 cc149 cc071 cc102 cc070 cc070
cc055 cc041 cc073 cc073 cc072
cc074 cc070 cc070 cc088 cc081 cc071 cc117
cc070 cc070 cc070 cc071 cc053 cc062 cc073 cc070
cc070 cc072 cc070 cc072 cc071 cc070 cc071 cc083 cc070
cc070 cc074 cc073 cc071 cc092 cc071 cc070 cc070
cc070 cc070 cc149 cc070 cc071 cc070 cc070
cc070 cc071 cc027 cc048 cc070 cc070 cc070
cc070 cc071 cc075 cc070 cc085 cc149 cc071 cc075
cc043 cc045 cc076 cc070 cc070 cc070
cc070 cc070 cc124 cc091 cc076
cc070 cc070 cc070 cc070 cc111 cc071 cc072
cc111 cc071 cc081 cc073 cc075 cc071
cc070 cc070 cc070 cc070 cc073 cc087 cc070 cc068 cc061
cc071 cc055 cc041 cc070 cc071 cc070 cc070
cc071 cc071 cc071 cc072 cc070 cc071 cc073 cc073
cc074 cc070 cc109 cc070 cc084 cc070 cc072 cc027 cc048
cc027 cc048 cc070 cc070 cc073 cc070
cc071 cc133 cc071 cc071 cc070 cc149 cc093 cc070 cc071
cc070 cc075 cc071 cc070 cc072 cc070 cc071 cc149
cc071 cc071 cc082 cc138 cc070 cc053 cc062 cc078 cc070
cc070 cc070 cc070 cc072 cc088 cc070 cc070 cc071
cc053 cc062 cc070 cc092 cc074 cc072 cc093 cc070
cc073 cc024 cc025 cc094 cc079 cc071
cc149 cc071 cc070 cc027 cc048
cc070 cc027 cc048 cc070 cc070 cc070 cc070 cc071 cc073
cc105 cc070 cc103 cc149 cc149 cc129 cc072
cc070 cc070 cc070 cc086 cc070 cc071 cc084 cc072
cc055 cc041 cc082 cc072 cc070 cc076 cc071 cc072
cc087 cc096 cc076 cc070 cc070 cc070 cc070
cc070 cc071 cc070 cc071 cc070 cc072 cc070 cc070
cc092 cc073 cc070 cc070 cc072 cc071 cc070 cc072 cc075
cc055 cc041 cc070 cc073 cc070 cc070
cc070 cc070 cc070 cc070 cc100
cc070 cc024 cc025 cc071 cc074 cc070 cc070 cc072 cc070
cc070 cc071 cc070 cc024 cc025 cc070
cc073 cc053 cc035 cc070 cc072 cc080 cc070
cc076 cc070 cc070 cc071 cc071 cc077 cc070 cc070
cc149 cc072 cc103 cc149 cc024 cc025 cc149 cc071
cc070 cc070 cc055 cc041 cc072 cc071 cc075
cc070 cc071 cc071 cc109 cc149 cc076 cc118 cc070 cc071
cc070 cc071 cc106 cc070 cc070 cc101 cc070
cc063 cc028 cc073 cc072 cc071 cc070
cc072 cc070 cc071 cc070 cc149 cc076 cc070 cc074 cc075
cc073 cc074 cc074 cc070 cc070 cc070
cc074 cc149 cc071 cc073 cc072 cc071 cc075 cc027 cc048
cc070 cc070 cc070 cc063 cc028 cc071 cc090
cc070 cc071 cc071 cc075 cc070 cc070
cc078 cc072 cc068 cc061 cc071
cc070 cc076 cc070 cc070 cc070 cc070 cc105
cc070 cc053 cc062 cc070 cc071 cc071 cc149 cc070 cc075
cc125 cc071 cc070 cc074 cc024 cc025
cc079 cc072 cc070 cc071 cc070
cc075 cc070 cc070 cc070 cc070 cc071 cc053 cc062
cc074 cc070 cc070 cc070 cc070 cc070 cc072 cc091
cc070 cc070 cc078 cc070 cc080 cc071 cc070 cc102
cc053 cc062 cc071 cc077 cc071 cc070 cc074 cc106 cc075
cc063 cc028 cc070 cc146 cc149 cc072
cc070 cc071 cc073 cc077 cc071 cc074
cc053 cc062 cc071 cc070 cc136
cc063 cc028 cc071 cc070 cc070
cc070 cc079 cc073 cc073 cc043 cc045 cc070 cc076
cc077 cc070 cc070 cc071 cc149 cc070 cc070 cc070 cc071
cc070 cc070 cc072 cc070 cc149 cc071 cc074 cc063 cc028
cc076 cc071 cc072 cc053 cc062
cc070 cc063 cc028 cc070 cc070 cc091 cc070 cc070
cc072 cc063 cc028 cc071 cc071 cc070
cc070 cc076 cc105 cc053 cc062 cc074 cc070 cc071 cc070
cc076 cc027 cc048 cc070 cc070 cc133 cc080 cc070
cc149 cc072 cc071 cc070 cc070 cc077 cc070
cc076 cc070 cc070 cc074 cc070 cc071
cc075 cc070 cc070 cc072 cc111
cc078 cc077 cc075 cc102 cc070 cc149 cc055 cc041 cc070
cc071 cc073 cc079 cc070 cc070 cc072 cc096 cc070 cc114
cc070 cc070 cc070 cc076 cc077 cc149 cc070 cc090 cc149
cc070 cc070 cc149 cc071 cc071 cc070 cc072 cc070 cc071
cc071 cc094 cc074 cc079 cc083 cc072 cc075
cc070 cc071 cc090 cc070 cc027 cc048 cc072
cc074 cc070 cc072 cc055 cc041 cc073
cc088 cc125 cc070 cc070 cc068 cc061
cc063 cc028 cc070 cc072 cc076
cc070 cc073 cc071 cc073 cc072 cc111 cc070
cc070 cc070 cc070 cc071 cc072 cc070
cc098 cc070 cc070 cc077 cc071 cc063 cc028 cc078 cc070
cc070 cc074 cc070 cc070 cc072 cc070
cc078 cc089 cc097 cc072 cc068 cc061 cc071 cc082
cc073 cc104 cc070 cc079 cc070 cc070
cc070 cc072 cc070 cc070 cc112 cc070 cc149 cc070 cc081
cc070 cc055 cc041 cc076 cc070 cc073 cc070 cc070 cc070
cc072 cc070 cc071 cc070 cc075 cc071 cc070 cc071
cc070 cc070 cc070 cc070 cc074 cc053 cc035 cc149 cc070
cc071 cc024 cc025 cc073 cc070 cc073
cc072 cc101 cc070 cc073 cc024 cc025
cc073 cc071 cc072 cc024 cc025 cc070
cc024 cc025 cc077 cc070 cc072 cc073 cc070
cc024 cc025 cc072 cc070 cc075 cc071
cc073 cc070 cc070 cc071 cc078 cc070 cc076 cc077 cc149
cc070 cc109 cc070 cc070 cc070
cc070 cc079 cc070 cc070 cc070 cc070
cc070 cc070 cc082 cc071 cc071 cc070 cc063 cc028 cc070
cc070 cc072 cc070 cc072 cc071 cc071 cc070 cc073
cc070 cc070 cc070 cc072 cc072 cc070
cc070 cc079 cc102 cc070 cc070 cc149 cc068 cc061 cc097
cc149 cc070 cc070 cc070 cc070
cc077 cc073 cc080 cc070 cc070 cc072 cc083 cc073 cc071
cc074 cc070 cc082 cc070 cc070 cc070 cc077
cc070 cc070 cc071 cc071 cc103 cc073 cc071 cc070 cc070
cc070 cc071 cc071 cc074 cc082
cc070 cc070 cc071 cc072 cc070 cc053 cc062
cc070 cc084 cc080 cc078 cc071 cc070
cc070 cc070 cc077 cc076 cc149
cc070 cc078 cc053 cc062 cc071 cc073 cc072 cc070
cc068 cc061 cc076 cc070 cc074 cc070 cc149 cc071
cc043 cc045 cc070 cc070 cc073 cc070
cc027 cc048 cc070 cc126 cc080
cc149 cc070 cc070 cc071 cc070 cc043 cc045
cc063 cc028 cc072 cc070 cc070 cc070
cc073 cc149 cc078 cc070 cc085 cc070 cc074 cc070 cc098
cc070 cc072 cc075 cc070 cc070
cc072 cc070 cc073 cc073 cc149 cc072 cc068 cc061 cc070
cc071 cc070 cc149 cc071 cc072 cc071 cc070 cc149
cc071 cc072 cc078 cc070 cc070 cc149 cc071 cc070
cc070 cc073 cc086 cc024 cc025 cc071
cc070 cc071 cc070 cc074 cc070 cc127 cc122 cc100
cc070 cc124 cc114 cc090 cc092 cc071 cc070 cc070 cc071
cc070 cc070 cc070 cc075 cc073 cc070 cc070 cc070
cc070 cc139 cc126 cc114 cc071 cc073 cc071 cc075
cc070 cc149 cc070 cc070 cc076 cc070 cc076 cc070
cc124 cc114 cc071 cc072 cc070 cc071
cc124 cc116 cc070 cc080 cc114 cc149 cc070 cc070
cc139 cc126 cc114 cc070 cc071
cc101 cc118 cc070 cc070 cc070 cc070 cc070 cc070
cc149 cc070 cc116 cc135 cc134
cc078 cc070 cc076 cc072 cc072 cc071
cc149 cc071 cc071 cc079 cc070
cc149 cc080 cc076 cc070 cc070
cc075 cc073 cc070 cc124 cc116 cc072 cc072
cc071 cc070 cc077 cc071 cc100 cc149 cc075 cc072
cc070 cc070 cc070 cc070 cc088 cc108 cc122
cc070 cc102 cc118 cc138 cc070 cc071
cc074 cc079 cc087 cc130 cc110
cc070 cc070 cc070 cc070 cc070 cc124 cc116 cc070 cc070
cc071 cc070 cc070 cc078 cc078
cc074 cc070 cc070 cc070 cc124 cc114 cc070 cc071 cc070
cc070 cc128 cc102 cc118 cc138
cc108 cc122 cc070 cc089 cc073 cc070 cc071
cc072 cc077 cc127 cc122 cc100 cc070 cc070 cc075 cc072
cc070 cc121 cc070 cc072 cc070 cc072 cc076 cc070 cc070
cc073 cc070 cc070 cc070 cc071 cc073 cc073 cc124 cc114
cc070 cc149 cc073 cc071 cc070 cc070
cc072 cc071 cc070 cc073 cc071 cc072
cc076 cc070 cc084 cc070 cc075
cc149 cc070 cc139 cc126 cc114 cc070
cc077 cc070 cc070 cc071 cc101 cc115
cc078 cc080 cc070 cc070 cc070 cc070 cc130
cc070 cc071 cc070 cc074 cc082 cc089 cc071
cc124 cc116 cc070 cc070 cc149 cc070 cc071 cc070
cc106 cc071 cc074 cc073 cc085
cc070 cc093 cc072 cc071 cc070 cc071
cc149 cc075 cc070 cc101 cc118
cc070 cc071 cc072 cc071 cc072 cc070 cc070 cc079
cc149 cc072 cc075 cc070 cc070 cc076
cc070 cc070 cc076 cc073 cc070 cc070 cc072
cc124 cc071 cc149 cc072 cc073
cc149 cc070 cc124 cc116 cc071 cc071
cc070 cc073 cc116 cc135 cc134 cc070 cc108 cc070 cc070
cc102 cc118 cc138 cc070 cc071
cc149 cc070 cc071 cc072 cc073 cc071 cc070 cc094 cc070
cc070 cc072 cc070 cc070 cc070
cc073 cc118 cc072 cc071 cc070 cc071
cc070 cc071 cc071 cc149 cc149 cc149 cc071 cc070
cc070 cc070 cc102 cc118 cc138 cc070 cc070 cc149 cc070
cc097 cc130 cc110 cc070 cc084 cc070 cc071
cc070 cc071 cc070 cc091 cc073 cc072 cc070 cc071 cc070
cc072 cc082 cc115 cc070 cc070 cc101 cc118 cc149
cc074 cc070 cc072 cc072 cc071 cc074 cc071 cc102 cc078
cc071 cc082 cc124 cc114 cc076 cc070 cc071 cc070
cc070 cc072 cc070 cc070 cc070 cc071 cc071 cc079
cc070 cc070 cc071 cc072 cc070 cc070 cc149 cc083
cc073 cc070 cc149 cc070 cc070 cc101 cc115 cc070 cc070
cc073 cc145 cc070 cc070 cc099 cc099 cc072 cc149
cc070 cc123 cc070 cc070 cc074
cc139 cc126 cc114 cc071 cc071
cc084 cc070 cc070 cc071 cc117 cc071 cc077
cc070 cc071 cc070 cc070 cc070 cc072 cc075 cc074 cc070
cc071 cc070 cc076 cc117 cc070 cc149 cc071 cc077 cc071
cc070 cc071 cc139 cc126 cc114 cc149
cc071 cc071 cc071 cc070 cc070 cc070 cc070 cc076 cc073
cc071 cc070 cc149 cc116 cc135 cc134 cc081 cc149 cc070
cc071 cc070 cc149 cc070 cc085 cc149 cc070 cc070
cc071 cc098 cc085 cc108 cc122 cc070 cc070
cc070 cc110 cc098 cc097 cc070 cc079 cc070 cc072
cc070 cc070 cc070 cc116 cc135 cc134 cc070 cc075 cc070
cc070 cc070 cc071 cc149 cc075
cc076 cc072 cc070 cc070 cc070 cc070 cc071
cc102 cc118 cc138 cc070 cc082
cc071 cc070 cc102 cc118 cc138 cc071 cc070 cc070 cc070
cc074 cc070 cc071 cc072 cc070 cc070 cc084
cc124 cc116 cc070 cc100 cc101
cc078 cc070 cc071 cc073 cc072 cc072 cc072
cc073 cc127 cc122 cc100 cc072 cc104 cc070 cc071 cc070
cc072 cc070 cc071 cc070 cc077 cc101 cc118 cc070 cc071
cc070 cc071 cc070 cc070 cc070 cc074
cc070 cc070 cc071 cc070 cc070
cc074 cc070 cc082 cc101 cc115 cc077 cc070
cc070 cc149 cc149 cc079 cc108 cc122 cc070 cc072
cc149 cc105 cc070 cc070 cc070 cc070 cc130 cc082 cc092
cc074 cc079 cc101 cc118 cc116 cc075 cc072
cc073 cc070 cc071 cc122 cc074 cc070 cc070 cc076
cc070 cc073 cc072 cc149 cc083 cc072 cc075
cc071 cc124 cc114 cc071 cc085 cc070 cc072 cc149
cc143 cc071 cc070 cc070 cc108 cc122 cc070 cc070
cc080 cc070 cc072 cc070 cc070 cc070 cc070 cc085
cc071 cc070 cc082 cc072 cc070 cc070 cc070 cc080 cc075
cc102 cc118 cc138 cc072 cc071
cc070 cc090 cc099 cc070 cc073 cc101 cc118
cc108 cc122 cc070 cc149 cc149
cc084 cc080 cc073 cc127 cc122 cc100
cc070 cc122 cc070 cc070 cc071 cc070
cc071 cc070 cc070 cc083 cc071
cc070 cc071 cc072 cc074 cc124 cc116 cc073 cc070 cc071
cc127 cc122 cc100 cc147 cc073
cc070 cc071 cc070 cc071 cc083 cc071 cc149
cc070 cc072 cc149 cc074 cc070 cc130 cc110
cc149 cc070 cc070 cc070 cc072
cc071 cc101 cc118 cc149 cc070 cc072 cc078 cc070 cc070
cc124 cc114 cc070 cc070 cc070 cc070 cc070
cc070 cc094 cc108 cc122 cc070 cc070
cc127 cc122 cc100 cc074 cc079
cc070 cc072 cc070 cc070 cc071 cc116 cc070 cc070
cc071 cc124 cc116 cc070 cc127 cc070
cc070 cc070 cc070 cc072 cc149 cc070
cc070 cc101 cc118 cc070 cc070 cc070
cc070 cc070 cc070 cc070 cc070 cc070
cc074 cc149 cc071 cc070 cc149
cc070 cc149 cc070 cc070 cc074 cc071 cc072 cc070
cc072 cc085 cc077 cc101 cc115
cc070 cc072 cc101 cc118 cc070 cc071 cc070 cc071 cc070
cc149 cc070 cc070 cc071 cc073 cc070 cc070
cc070 cc071 cc070 cc070 cc149 cc071 cc075
cc070 cc070 cc124 cc116 cc070
cc072 cc139 cc126 cc114 cc070
cc075 cc072 cc071 cc089 cc118 cc070 cc070 cc079
cc149 cc070 cc075 cc101 cc071
cc070 cc070 cc071 cc075 cc079 cc070 cc070 cc070 cc106
cc127 cc122 cc100 cc080 cc149 cc071
cc149 cc102 cc118 cc138 cc070 cc076
cc070 cc072 cc070 cc073 cc072
cc071 cc070 cc071 cc070 cc070 cc125
cc081 cc070 cc070 cc070 cc075 cc070 cc070 cc070
cc070 cc072 cc074 cc108 cc122 cc079
cc072 cc101 cc115 cc070 cc070
cc101 cc118 cc070 cc078 cc070 cc073 cc070 cc070
cc071 cc073 cc149 cc070 cc070 cc070 cc071 cc101 cc115
cc071 cc091 cc139 cc126 cc114
cc116 cc135 cc134 cc070 cc086 cc149 cc070 cc070
cc070 cc070 cc149 cc070 cc074 cc072 cc072
cc081 cc077 cc075 cc074 cc071
cc070 cc072 cc116 cc135 cc134 cc070
cc074 cc149 cc072 cc101 cc115 cc070 cc070
cc089 cc073 cc075 cc072 cc070
cc070 cc108 cc122 cc070 cc071 cc071 cc070
cc071 cc071 cc070 cc070 cc124 cc116 cc081 cc070 cc071
