hh070 hh070 hh065 hh047 hh040
hh070 hh071 hh080 hh070 hh071 hh094 hh071 hh071
hh070 hh056 hh035 hh034 hh071
hh082 hh070 hh072 hh106 hh070 hh070
hh030 hh050 hh073 hh075 hh070 hh072 hh075
hh149 hh072 hh072 hh071 hh071 hh081 hh070 hh072
hh072 hh070 hh078 hh077 hh070 hh070 hh100 hh070 hh070
hh034 hh037 hh060 hh072 hh093 hh070
hh078 hh070 hh078 hh070 hh082 hh070 hh041 hh058
hh078 hh076 hh076 hh070 hh070 hh070 hh071 hh070 hh071
hh074 hh149 hh070 hh072 hh072 hh072
hh071 hh073 hh075 hh070 hh071 hh085 hh064 hh056 hh071
hh072 hh035 hh057 hh038 hh073 hh070 hh070 hh149
hh076 hh073 hh071 hh071 hh149 hh070 hh074
hh030 hh050 hh071 hh149 hh119
hh072 hh071 hh071 hh070 hh070 hh070 hh074 hh070 hh070
hh074 hh074 hh070 hh070 hh070 hh070 hh149 hh072
hh070 hh149 hh071 hh070 hh073 hh070 hh080 hh070 hh070
hh070 hh070 hh072 hh070 hh071 hh070 hh070 hh079
hh070 hh072 hh043 hh037 hh073 hh070 hh070
hh075 hh070 hh070 hh071 hh027 hh062 hh040
hh075 hh070 hh070 hh070 hh043 hh037
hh034 hh037 hh060 hh071 hh070 hh149
hh070 hh071 hh024 hh054 hh072 hh149 hh070 hh070 hh071
hh081 hh084 hh112 hh070 hh070 hh070 hh091
hh041 hh058 hh072 hh070 hh074 hh097 hh071 hh070 hh070
hh034 hh037 hh060 hh070 hh070 hh070 hh072 hh070
hh070 hh149 hh070 hh064 hh056
hh070 hh070 hh070 hh072 hh108 hh043 hh037 hh071 hh074
hh070 hh070 hh070 hh070 hh071 hh073 hh070 hh070
hh088 hh071 hh070 hh149 hh070 hh098
hh070 hh070 hh070 hh070 hh070 hh070 hh070
hh075 hh072 hh070 hh071 hh073 hh149 hh070 hh070
hh070 hh076 hh053 hh062 hh136 hh070 hh070 hh070 hh070
hh071 hh027 hh048 hh074 hh071
hh071 hh071 hh070 hh070 hh070
hh087 hh072 hh149 hh070 hh070 hh071
hh114 hh149 hh071 hh071 hh073 hh070 hh070 hh070 hh071
hh076 hh073 hh070 hh110 hh076 hh070 hh070 hh097
hh070 hh090 hh074 hh149 hh078 hh076 hh070 hh072
hh070 hh149 hh070 hh070 hh072 hh119
hh074 hh075 hh039 hh026 hh054 hh072 hh074 hh070 hh071
hh070 hh071 hh070 hh070 hh070 hh131 hh081
hh081 hh070 hh070 hh113 hh070 hh071 hh149 hh071
hh071 hh104 hh070 hh071 hh106
hh070 hh070 hh122 hh071 hh075 hh071 hh076 hh070 hh070
hh070 hh071 hh072 hh070 hh074
hh070 hh087 hh070 hh056 hh035 hh034 hh074
hh070 hh080 hh070 hh073 hh070 hh149 hh131 hh073
hh070 hh095 hh074 hh071 hh070 hh071 hh080
hh070 hh070 hh070 hh070 hh085 hh070
hh098 hh084 hh077 hh070 hh072
hh075 hh070 hh070 hh070 hh070 hh042 hh058 hh038 hh071
hh112 hh113 hh135 hh077 hh070
hh072 hh074 hh070 hh113 hh135 hh070
hh071 hh071 hh070 hh070 hh071 hh070 hh070
hh073 hh071 hh070 hh072 hh070 hh070 hh072
hh072 hh070 hh073 hh070 hh149 hh149
hh070 hh070 hh070 hh071 hh070 hh102 hh070 hh071
hh070 hh070 hh043 hh037 hh072
hh075 hh071 hh070 hh072 hh071 hh070 hh070 hh070
hh070 hh071 hh073 hh073 hh115 hh061 hh044 hh065 hh085
hh076 hh070 hh070 hh072 hh084 hh070
hh027 hh062 hh040 hh070 hh077 hh071 hh117
hh091 hh070 hh070 hh061 hh044 hh065
hh070 hh079 hh070 hh061 hh044 hh065 hh084
hh071 hh070 hh070 hh070 hh070 hh077
hh070 hh039 hh026 hh054 hh087 hh070 hh071 hh076
hh071 hh083 hh070 hh070 hh071 hh070 hh070
hh070 hh053 hh062 hh072 hh149 hh070 hh073 hh131 hh082
hh070 hh070 hh149 hh070 hh073 hh053 hh062 hh095
hh073 hh075 hh072 hh070 hh073 hh073 hh070 hh071
hh070 hh053 hh062 hh071 hh070 hh072
hh149 hh070 hh149 hh073 hh075 hh070 hh070 hh070 hh071
hh070 hh070 hh094 hh070 hh076 hh070 hh070
hh074 hh056 hh035 hh034 hh070
hh070 hh071 hh070 hh061 hh044 hh065
hh072 hh128 hh073 hh149 hh071 hh070
hh079 hh075 hh070 hh070 hh070
hh070 hh071 hh070 hh072 hh072 hh072 hh070 hh072 hh149
hh071 hh070 hh079 hh070 hh070
hh071 hh075 hh070 hh084 hh070
hh079 hh149 hh072 hh077 hh083 hh064 hh056
hh070 hh149 hh041 hh055 hh070 hh073 hh147 hh070 hh070
hh070 hh071 hh073 hh094 hh072 hh075 hh121 hh074 hh071
hh039 hh026 hh054 hh074 hh070
hh117 hh149 hh073 hh070 hh075 hh041 hh055
hh070 hh071 hh070 hh070 hh070 hh027 hh048 hh070
hh074 hh070 hh070 hh070 hh070 hh079 hh070 hh072 hh071
hh071 hh070 hh075 hh149 hh024 hh054
hh070 hh149 hh104 hh070 hh070 hh070 hh070
hh070 hh070 hh048 hh062 hh080 hh071 hh070 hh070
hh070 hh072 hh070 hh070 hh072 hh078 hh070 hh070
hh070 hh070 hh149 hh079 hh027 hh048 hh094 hh070 hh070
hh072 hh080 hh070 hh043 hh037
hh073 hh070 hh070 hh070 hh099 hh107 hh073 hh070 hh070
hh072 hh149 hh041 hh058 hh070 hh072 hh071
hh070 hh109 hh072 hh070 hh113 hh135
hh056 hh035 hh034 hh070 hh077
hh072 hh149 hh149 hh082 hh073 hh101 hh073 hh041 hh058
hh077 hh070 hh071 hh073 hh070 hh070 hh070 hh073
hh071 hh072 hh072 hh083 hh083
hh070 hh101 hh072 hh104 hh149 hh070 hh074
hh149 hh070 hh113 hh135 hh071 hh071 hh071
hh035 hh057 hh038 hh070 hh070
hh070 hh070 hh080 hh071 hh070 hh070
hh070 hh070 hh070 hh070 hh149 hh071
hh071 hh075 hh070 hh115 hh048 hh062
hh070 hh070 hh096 hh149 hh070 hh149
hh077 hh070 hh071 hh089 hh108
hh027 hh062 hh040 hh071 hh070 hh070
hh064 hh056 hh070 hh086 hh070 hh070 hh107
hh070 hh082 hh076 hh070 hh070 hh071 hh149 hh090 hh070
hh074 hh073 hh149 hh070 hh070 hh149 hh070 hh030 hh050
hh070 hh073 hh035 hh057 hh038 hh121 hh070
hh070 hh097 hh070 hh079 hh070 hh074 hh070 hh070 hh149
hh070 hh071 hh080 hh074 hh041 hh058
hh070 hh071 hh079 hh073 hh070 hh043 hh037 hh079
hh076 hh070 hh070 hh086 hh079 hh070 hh070 hh070
hh070 hh070 hh042 hh058 hh038 hh102
hh144 hh101 hh070 hh064 hh056 hh070 hh132 hh071 hh070
hh070 hh149 hh070 hh070 hh070 hh070 hh070 hh071 hh070
hh070 hh149 hh070 hh070 hh072 hh070
hh070 hh070 hh070 hh053 hh062 hh097
hh070 hh070 hh071 hh070 hh149 hh080
hh070 hh056 hh035 hh034 hh149
hh070 hh070 hh070 hh071 hh070 hh070 hh070
hh070 hh082 hh074 hh092 hh070 hh070 hh074
hh070 hh098 hh070 hh073 hh070
hh071 hh070 hh072 hh070 hh070 hh071 hh070 hh071
hh070 hh070 hh071 hh071 hh072 hh124 hh088
hh070 hh070 hh070 hh070 hh070 hh070 hh070 hh070
hh073 hh070 hh065 hh047 hh040 hh108 hh086
hh071 hh064 hh056 hh072 hh084 hh093 hh070
hh074 hh073 hh071 hh071 hh070
hh070 hh073 hh072 hh070 hh071
hh094 hh072 hh034 hh037 hh060 hh071 hh149
hh070 hh070 hh071 hh070 hh080
hh072 hh070 hh070 hh070 hh070 hh070 hh073 hh072
hh070 hh070 hh075 hh081 hh070
hh070 hh149 hh149 hh073 hh071 hh070 hh082 hh070 hh073
hh073 hh080 hh064 hh056 hh089 hh149 hh149
hh096 hh072 hh070 hh070 hh034 hh037 hh060 hh074 hh070
hh070 hh070 hh072 hh070 hh070 hh071
hh070 hh072 hh070 hh074 hh070 hh070
hh064 hh056 hh071 hh070 hh070 hh070
hh074 hh070 hh070 hh076 hh071
hh102 hh072 hh073 hh071 hh071 hh070 hh071
hh149 hh070 hh071 hh070 hh070 hh071 hh070
hh039 hh026 hh054 hh074 hh085 hh149
hh082 hh035 hh057 hh038 hh071
hh072 hh115 hh077 hh070 hh041 hh058 hh073 hh070
hh071 hh071 hh071 hh070 hh149 hh070 hh074 hh073 hh149
hh071 hh076 hh074 hh076 hh123 hh072 hh070 hh073
hh030 hh050 hh070 hh070 hh070 hh149
hh070 hh075 hh070 hh070 hh078
hh074 hh064 hh056 hh071 hh071 hh072
hh070 hh149 hh077 hh061 hh044 hh065 hh096 hh070
hh082 hh106 hh070 hh074 hh070 hh070 hh149 hh070 hh070
hh027 hh062 hh040 hh149 hh072 hh070
hh071 hh072 hh048 hh062 hh071 hh072 hh079 hh071 hh071
hh070 hh071 hh080 hh070 hh071 hh070 hh070 hh070 hh070
hh070 hh035 hh057 hh038 hh080 hh149 hh070
hh070 hh070 hh053 hh062 hh072 hh070 hh074 hh072
hh072 hh071 hh070 hh039 hh026 hh054
hh071 hh041 hh055 hh071 hh070 hh070 hh149 hh071 hh072
hh056 hh035 hh034 hh070 hh070 hh081 hh070
hh070 hh149 hh072 hh056 hh035 hh034
hh071 hh072 hh070 hh097 hh101 hh070 hh072
hh075 hh061 hh044 hh065 hh070 hh070
hh070 hh071 hh070 hh034 hh037 hh060 hh075
hh072 hh071 hh077 hh094 hh074 hh080 hh071 hh071 hh088
hh097 hh073 hh056 hh035 hh034
hh078 hh071 hh070 hh073 hh070
hh074 hh095 hh071 hh070 hh073 hh070
hh070 hh070 hh100 hh070 hh077
hh070 hh071 hh070 hh071 hh072 hh070 hh071 hh053 hh062
hh070 hh064 hh056 hh074 hh070
hh070 hh071 hh072 hh085 hh071 hh070 hh087
hh072 hh056 hh035 hh034 hh074 hh079 hh072
hh071 hh071 hh035 hh057 hh038
hh082 hh070 hh078 hh094 hh070 hh071 hh070 hh070 hh070
hh070 hh072 hh073 hh078 hh088 hh093
hh071 hh078 hh071 hh071 hh070 hh070 hh070 hh070 hh072
hh043 hh037 hh080 hh085 hh070
hh070 hh074 hh086 hh074 hh072 hh070 hh070 hh064 hh056
hh071 hh071 hh070 hh070 hh070
hh070 hh072 hh070 hh071 hh053 hh062 hh070
hh042 hh058 hh038 hh070 hh078 hh070
hh071 hh072 hh071 hh070 hh048 hh062 hh072 hh072
hh080 hh070 hh073 hh070 hh072 hh070
hh070 hh071 hh119 hh027 hh048 hh070 hh089
hh080 hh071 hh092 hh074 hh070 hh071 hh070
hh072 hh070 hh070 hh070 hh071 hh043 hh037 hh071 hh070
hh072 hh027 hh062 hh040 hh070
hh070 hh042 hh058 hh038 hh070 hh070
hh071 hh076 hh117 hh071 hh071 hh080 hh070
hh071 hh072 hh073 hh073 hh070
hh070 hh108 hh070 hh070 hh071 hh085 hh132 hh073
hh070 hh041 hh058 hh076 hh080 hh071 hh070 hh071 hh073
hh070 hh070 hh084 hh076 hh071 hh070 hh072 hh115
hh041 hh058 hh071 hh070 hh070 hh071 hh070
hh078 hh071 hh072 hh070 hh070 hh035 hh057 hh038 hh070
hh074 hh074 hh070 hh042 hh058 hh038
hh073 hh082 hh074 hh070 hh072 hh083 hh027 hh048
hh093 hh070 hh076 hh081 hh071 hh073 hh071 hh071 hh072
hh071 hh070 hh072 hh070 hh090 hh070
hh071 hh035 hh057 hh038 hh076
hh070 hh073 hh070 hh149 hh042 hh058 hh038
hh079 hh070 hh070 hh027 hh048 hh070
hh034 hh037 hh060 hh071 hh070 hh075
hh070 hh079 hh078 hh071 hh043 hh037 hh071 hh072 hh070
hh070 hh070 hh070 hh087 hh070 hh070 hh070 hh070
hh096 hh089 hh071 hh072 hh074 hh070
hh080 hh076 hh042 hh058 hh038
hh070 hh112 hh070 hh071 hh070 hh148 hh070
hh071 hh070 hh070 hh076 hh042 hh058 hh038
hh075 hh070 hh070 hh070 hh149 hh071 hh070 hh106 hh071
hh070 hh070 hh070 hh070 hh071 hh090 hh071 hh070 hh070
hh072 hh145 hh070 hh126 hh084
hh072 hh086 hh072 hh149 hh070 hh079 hh070 hh048 hh062
hh070 hh071 hh079 hh048 hh062 hh072 hh149
hh070 hh064 hh056 hh070 hh070
hh070 hh035 hh057 hh038 hh070 hh122
hh077 hh064 hh056 hh070 hh070 hh070
hh071 hh041 hh058 hh070 hh070 hh082 hh070 hh149
hh056 hh035 hh034 hh071 hh079
hh030 hh050 hh070 hh074 hh080 hh070 hh087 hh076
hh070 hh087 hh043 hh037 hh070 hh071 hh070 hh075
hh074 hh070 hh075 hh070 hh071 hh072 hh071 hh073
hh077 hh070 hh070 hh073 hh024 hh054
hh070 hh071 hh048 hh062 hh074
hh070 hh064 hh056 hh073 hh073 hh070 hh071 hh070
hh149 hh071 hh073 hh070 hh070 hh071
hh071 hh070 hh070 hh072 hh070 hh070
hh081 hh072 hh070 hh071 hh149
hh073 hh070 hh070 hh072 hh070 hh056 hh035 hh034 hh080
hh079 hh071 hh070 hh070 hh070 hh072 hh071 hh070 hh070
hh070 hh071 hh074 hh149 hh070
hh070 hh070 hh070 hh071 hh070 hh056 hh035 hh034 hh070
hh149 hh149 hh071 hh072 hh072 hh070
hh070 hh043 hh037 hh070 hh081 hh149
hh070 hh089 hh072 hh070 hh070
hh072 hh070 hh070 hh070 hh070 hh070 hh074 hh070
hh071 hh071 hh116 hh071 hh070 hh081 hh070 hh070
hh070 hh079 hh071 hh149 hh075
hh070 hh070 hh071 hh072 hh082 hh070 hh073 hh070
hh122 hh080 hh070 hh095 hh070 hh072 hh077 hh070 hh070
hh079 hh072 hh070 hh070 hh071 hh035 hh057 hh038
hh149 hh072 hh070 hh070 hh070 hh083 hh072 hh070
hh081 hh070 hh070 hh070 hh070 hh064 hh056 hh071
hh071 hh081 hh071 hh027 hh048 hh073
hh071 hh073 hh149 hh101 hh089 hh071 hh073 hh072
hh074 hh070 hh070 hh101 hh070 hh070 hh071 hh070 hh074
hh112 hh149 hh149 hh070 hh087 hh096 hh070 hh070 hh070
hh073 hh070 hh070 hh070 hh070 hh077 hh071 hh070
hh056 hh035 hh034 hh149 hh104 hh070 hh078 hh070
hh076 hh102 hh070 hh075 hh077 hh149
hh070 hh090 hh070 hh070 hh071 hh041 hh055 hh070 hh073
hh073 hh077 hh070 hh085 hh071 hh149 hh072 hh071 hh070
hh070 hh149 hh070 hh070 hh070 hh071 hh073 hh070
hh072 hh070 hh149 hh072 hh070 hh149 hh079
hh072 hh071 hh072 hh071 hh070 hh070 hh065 hh047 hh040
hh070 hh041 hh055 hh074 hh070 hh070
hh053 hh062 hh083 hh072 hh073 hh073 hh086
hh149 hh065 hh047 hh040 hh084 hh093 hh070
hh070 hh071 hh075 hh071 hh071 hh070
hh077 hh071 hh149 hh041 hh058 hh070
hh073 hh073 hh070 hh086 hh071
hh070 hh072 hh070 hh070 hh070 hh074 hh070
hh071 hh070 hh105 hh070 hh070
hh140 hh070 hh070 hh070 hh073 hh123 hh065 hh047 hh040
hh107 hh149 hh071 hh042 hh058 hh038 hh071 hh136
hh074 hh083 hh070 hh098 hh070 hh071
hh072 hh070 hh081 hh071 hh149 hh070
hh071 hh071 hh071 hh070 hh106 hh071 hh073 hh070
hh070 hh070 hh072 hh073 hh070 hh070 hh082 hh070
hh056 hh035 hh034 hh070 hh073 hh071 hh149
hh070 hh070 hh071 hh149 hh073 hh072
hh149 hh078 hh072 hh070 hh070
