hh149 hh089 hh070 hh070 hh072 hh097
hh071 hh072 hh080 hh080 hh073 hh109 hh072
hh071 hh070 hh070 hh149 hh073 hh070 hh070
hh075 hh071 hh070 hh070 hh088 hh039 hh026 hh054
hh072 hh070 hh072 hh071 hh071 hh070 hh106 hh070 hh070
hh075 hh070 hh070 hh073 hh072 hh070 hh064 hh056
hh070 hh072 hh070 hh071 hh070 hh071 hh071 hh071
hh071 hh070 hh071 hh073 hh149 hh149 hh070 hh070
hh077 hh071 hh034 hh037 hh060 hh086 hh070
hh070 hh070 hh070 hh034 hh037 hh060 hh070 hh070
hh070 hh077 hh071 hh117 hh070 hh076 hh070 hh070
hh070 hh071 hh071 hh071 hh070
hh070 hh070 hh149 hh070 hh078
hh070 hh074 hh027 hh062 hh040 hh077 hh071 hh082
hh149 hh091 hh070 hh082 hh085 hh070
hh149 hh149 hh041 hh055 hh070
hh048 hh062 hh070 hh071 hh070 hh071 hh070 hh082 hh072
hh070 hh034 hh037 hh060 hh071
hh072 hh070 hh070 hh071 hh070
hh075 hh043 hh037 hh070 hh074 hh081
hh071 hh075 hh113 hh135 hh070 hh093 hh081
hh070 hh149 hh070 hh070 hh071 hh149 hh070 hh070
hh070 hh065 hh047 hh040 hh070 hh086 hh074
hh071 hh078 hh071 hh027 hh062 hh040 hh071
hh076 hh071 hh075 hh071 hh039 hh026 hh054 hh072
hh072 hh071 hh072 hh070 hh070 hh149
hh149 hh072 hh064 hh056 hh085
hh072 hh097 hh108 hh070 hh076 hh095
hh070 hh111 hh072 hh077 hh070 hh073 hh088 hh075
hh073 hh070 hh070 hh071 hh071 hh071
hh082 hh070 hh077 hh064 hh056
hh149 hh076 hh035 hh057 hh038 hh149 hh070 hh074
hh073 hh086 hh089 hh071 hh072 hh071 hh070 hh027 hh048
hh070 hh072 hh075 hh070 hh149 hh071 hh070 hh053 hh062
hh080 hh070 hh070 hh077 hh042 hh058 hh038 hh070
hh034 hh037 hh060 hh149 hh101
hh070 hh078 hh076 hh073 hh093 hh084
hh070 hh073 hh074 hh075 hh071
hh084 hh085 hh071 hh128 hh075 hh149 hh091
hh095 hh079 hh070 hh074 hh070 hh041 hh058 hh070
hh089 hh149 hh070 hh072 hh072 hh075
hh092 hh070 hh070 hh074 hh070 hh070 hh070 hh071 hh070
hh084 hh065 hh047 hh040 hh070 hh149 hh072
hh071 hh070 hh072 hh070 hh070 hh071 hh071 hh071 hh070
hh070 hh097 hh070 hh071 hh092 hh065 hh047 hh040
hh071 hh070 hh070 hh074 hh071 hh070 hh074 hh070
hh070 hh070 hh070 hh061 hh044 hh065 hh074 hh078
hh070 hh149 hh070 hh074 hh070 hh070
hh075 hh070 hh043 hh037 hh072 hh078
hh072 hh072 hh070 hh061 hh044 hh065
hh070 hh070 hh082 hh071 hh113 hh135 hh070 hh149 hh070
hh072 hh070 hh071 hh071 hh071 hh071 hh073 hh070 hh080
hh077 hh070 hh075 hh064 hh056 hh071
hh070 hh149 hh070 hh087 hh064 hh056
hh070 hh027 hh048 hh073 hh070 hh071 hh079 hh149 hh076
hh103 hh070 hh074 hh070 hh072 hh072
hh070 hh070 hh082 hh070 hh070 hh070 hh071
hh071 hh071 hh070 hh073 hh064 hh056 hh104
hh070 hh077 hh070 hh079 hh070 hh070
hh070 hh076 hh071 hh070 hh075 hh071 hh073
hh074 hh149 hh070 hh039 hh026 hh054 hh071
hh072 hh075 hh080 hh071 hh027 hh062 hh040 hh073
hh071 hh090 hh071 hh070 hh073 hh072 hh035 hh057 hh038
hh073 hh079 hh071 hh073 hh070 hh070 hh070
hh070 hh149 hh070 hh070 hh070
hh070 hh070 hh123 hh071 hh092 hh078 hh071 hh070 hh077
hh070 hh070 hh071 hh070 hh084 hh070 hh070
hh072 hh071 hh070 hh072 hh070 hh071 hh070 hh071
hh072 hh149 hh070 hh075 hh073
hh119 hh070 hh070 hh070 hh071
hh070 hh070 hh070 hh077 hh070 hh072 hh070
hh071 hh070 hh064 hh056 hh070
hh071 hh071 hh053 hh062 hh078 hh070 hh076
hh072 hh070 hh070 hh070 hh070 hh070 hh070
hh071 hh070 hh073 hh073 hh090 hh071
hh071 hh048 hh062 hh070 hh071 hh074
hh076 hh149 hh149 hh071 hh070 hh070
hh071 hh027 hh062 hh040 hh076
hh071 hh149 hh085 hh070 hh070 hh078 hh070 hh070
hh070 hh077 hh070 hh071 hh070 hh034 hh037 hh060 hh070
hh061 hh044 hh065 hh070 hh107 hh070 hh071 hh077
hh074 hh075 hh070 hh070 hh070 hh075
hh071 hh107 hh070 hh070 hh097 hh070 hh071
hh070 hh070 hh096 hh072 hh070 hh071 hh070 hh070
hh080 hh072 hh070 hh070 hh070
hh149 hh070 hh070 hh070 hh081 hh070
hh070 hh079 hh070 hh070 hh105 hh070 hh070
hh027 hh062 hh040 hh087 hh149
hh070 hh030 hh050 hh070 hh149 hh071 hh071 hh076
hh070 hh125 hh070 hh070 hh070
hh077 hh072 hh070 hh071 hh070 hh075
hh042 hh058 hh038 hh072 hh098
hh027 hh048 hh073 hh072 hh070 hh071
hh070 hh073 hh070 hh070 hh070 hh080
hh070 hh116 hh149 hh070 hh073 hh071 hh071
hh073 hh096 hh070 hh071 hh072 hh070 hh072 hh093 hh070
hh035 hh057 hh038 hh070 hh070
hh073 hh071 hh070 hh070 hh070
hh070 hh078 hh073 hh078 hh070 hh142 hh149 hh070 hh070
hh070 hh071 hh076 hh070 hh070 hh085
hh073 hh070 hh024 hh054 hh070 hh073
hh091 hh071 hh095 hh070 hh070 hh077 hh149 hh071 hh070
hh076 hh127 hh149 hh098 hh071 hh075
hh072 hh070 hh070 hh070 hh070
hh070 hh071 hh079 hh071 hh070 hh034 hh037 hh060 hh070
hh073 hh080 hh082 hh071 hh073 hh073 hh070 hh149
hh072 hh088 hh086 hh043 hh037
hh070 hh027 hh048 hh070 hh070 hh070 hh071 hh096 hh070
hh070 hh064 hh056 hh077 hh120 hh072 hh114
hh070 hh149 hh073 hh072 hh071 hh070 hh070
hh072 hh070 hh070 hh070 hh072
hh149 hh070 hh070 hh090 hh073 hh070 hh071
hh070 hh084 hh149 hh070 hh070 hh102 hh043 hh037
hh070 hh070 hh070 hh072 hh071 hh149 hh149 hh070 hh070
hh041 hh055 hh070 hh070 hh071
hh071 hh075 hh048 hh062 hh091 hh149 hh070 hh070
hh070 hh070 hh073 hh070 hh048 hh062
hh070 hh070 hh070 hh070 hh070 hh149 hh083 hh071 hh070
hh070 hh113 hh135 hh149 hh071 hh082
hh149 hh074 hh070 hh071 hh070 hh070 hh114
hh070 hh053 hh062 hh070 hh071
hh070 hh070 hh070 hh064 hh056 hh075
hh072 hh081 hh071 hh071 hh073 hh070 hh071 hh072
hh070 hh149 hh070 hh072 hh041 hh058 hh070 hh072 hh071
hh074 hh097 hh070 hh071 hh073 hh070 hh081 hh072 hh070
hh071 hh042 hh058 hh038 hh074 hh073 hh079 hh070 hh082
hh071 hh070 hh070 hh071 hh114 hh087 hh072 hh070
hh070 hh149 hh071 hh149 hh070 hh070 hh149 hh070
hh070 hh070 hh070 hh073 hh065 hh047 hh040 hh070 hh073
hh071 hh070 hh070 hh072 hh070 hh070 hh070 hh077
hh149 hh070 hh070 hh072 hh076 hh075 hh070 hh091 hh071
hh071 hh099 hh070 hh070 hh070 hh090 hh073 hh127 hh135
hh074 hh070 hh071 hh149 hh053 hh062
hh070 hh073 hh064 hh056 hh071 hh070 hh111
hh076 hh073 hh070 hh071 hh071 hh149 hh070 hh070
hh070 hh071 hh070 hh048 hh062 hh071 hh070
hh027 hh062 hh040 hh070 hh071
hh084 hh070 hh078 hh041 hh058 hh070
hh078 hh074 hh072 hh027 hh062 hh040 hh084 hh073 hh149
hh071 hh070 hh078 hh149 hh027 hh062 hh040 hh076
hh071 hh070 hh071 hh071 hh072 hh070 hh098 hh073
hh075 hh072 hh070 hh042 hh058 hh038
hh070 hh078 hh070 hh072 hh072 hh078 hh070 hh070
hh079 hh076 hh071 hh149 hh071 hh149 hh071
hh070 hh074 hh070 hh075 hh085 hh070 hh104 hh070
hh078 hh035 hh057 hh038 hh070 hh073 hh071
hh070 hh073 hh071 hh074 hh070
hh076 hh070 hh042 hh058 hh038 hh071 hh070 hh081
hh086 hh070 hh070 hh114 hh130 hh079 hh072 hh070 hh070
hh070 hh092 hh123 hh073 hh070 hh053 hh062
hh041 hh055 hh070 hh072 hh071 hh070 hh070 hh077
hh070 hh070 hh080 hh035 hh057 hh038 hh073
hh070 hh070 hh087 hh089 hh073 hh071 hh072
hh039 hh026 hh054 hh149 hh071
hh073 hh072 hh149 hh070 hh079
hh070 hh071 hh071 hh070 hh123
hh070 hh149 hh111 hh070 hh071 hh072 hh070 hh076
hh070 hh071 hh075 hh070 hh076 hh071 hh070 hh077 hh085
hh071 hh081 hh070 hh124 hh071 hh070 hh099 hh070 hh070
hh073 hh071 hh073 hh070 hh078 hh076 hh070 hh070
hh056 hh035 hh034 hh070 hh071 hh071
hh070 hh080 hh070 hh074 hh070 hh070
hh071 hh073 hh070 hh074 hh070
hh039 hh026 hh054 hh070 hh070 hh070 hh088
hh077 hh149 hh041 hh058 hh070 hh070
hh072 hh070 hh034 hh037 hh060 hh070
hh072 hh070 hh070 hh072 hh071 hh072 hh070
hh073 hh070 hh081 hh070 hh034 hh037 hh060 hh073 hh072
hh071 hh076 hh070 hh077 hh071 hh073 hh070 hh078
hh072 hh071 hh070 hh070 hh071 hh070
hh056 hh035 hh034 hh149 hh149 hh077 hh074 hh097
hh076 hh080 hh074 hh070 hh072 hh149 hh149 hh070 hh071
hh084 hh091 hh056 hh035 hh034
hh071 hh070 hh072 hh070 hh070 hh043 hh037
hh149 hh082 hh070 hh070 hh070 hh081 hh075 hh070 hh070
hh042 hh058 hh038 hh073 hh106
hh149 hh071 hh084 hh079 hh080 hh076 hh071
hh083 hh043 hh037 hh070 hh071 hh082 hh070 hh070 hh070
hh070 hh070 hh085 hh070 hh070 hh070 hh071
hh077 hh071 hh071 hh064 hh056 hh076 hh070
hh070 hh074 hh071 hh030 hh050 hh075 hh072 hh075
hh086 hh070 hh083 hh149 hh073 hh082 hh072 hh113
hh072 hh070 hh070 hh070 hh072 hh071 hh070
hh070 hh080 hh024 hh054 hh071 hh071 hh070 hh071 hh072
hh071 hh077 hh027 hh062 hh040 hh071 hh078 hh074
hh064 hh056 hh070 hh149 hh070 hh072 hh072
hh077 hh070 hh070 hh071 hh070 hh070 hh072 hh070
hh070 hh072 hh071 hh071 hh071 hh070 hh039 hh026 hh054
hh075 hh072 hh061 hh044 hh065
hh070 hh094 hh070 hh070 hh070 hh083 hh071 hh070
hh064 hh056 hh070 hh074 hh072
hh071 hh070 hh071 hh039 hh026 hh054 hh070 hh071 hh149
hh070 hh071 hh071 hh070 hh072 hh071 hh071 hh097
hh075 hh070 hh103 hh027 hh062 hh040 hh071
hh035 hh057 hh038 hh079 hh072 hh071 hh072 hh072 hh070
hh072 hh070 hh075 hh030 hh050 hh071 hh085
hh070 hh071 hh024 hh054 hh076
hh070 hh149 hh070 hh042 hh058 hh038 hh070
hh076 hh071 hh071 hh070 hh071 hh070
hh074 hh070 hh075 hh071 hh070 hh034 hh037 hh060 hh070
hh103 hh073 hh077 hh070 hh070 hh070
hh042 hh058 hh038 hh070 hh070
hh056 hh035 hh034 hh070 hh070 hh070
hh089 hh071 hh027 hh048 hh110 hh072 hh070 hh074
hh070 hh072 hh074 hh070 hh149
hh071 hh071 hh071 hh070 hh073 hh072 hh070 hh076 hh070
hh071 hh070 hh149 hh070 hh099 hh070 hh070 hh076
hh071 hh070 hh035 hh057 hh038
hh149 hh061 hh044 hh065 hh081
hh071 hh056 hh035 hh034 hh074 hh070 hh071 hh079
hh070 hh072 hh070 hh113 hh079 hh073 hh079 hh071
hh070 hh070 hh080 hh074 hh073
hh070 hh070 hh070 hh041 hh055 hh072
hh071 hh070 hh072 hh088 hh077
hh048 hh062 hh070 hh071 hh105
hh070 hh070 hh070 hh070 hh070 hh070 hh076
hh077 hh115 hh071 hh070 hh078 hh075 hh072 hh072 hh077
hh070 hh070 hh064 hh056 hh070 hh070 hh080 hh070
hh070 hh109 hh149 hh070 hh070 hh071 hh070 hh072
hh078 hh074 hh073 hh071 hh070 hh070
hh070 hh070 hh070 hh071 hh071 hh071
hh071 hh070 hh074 hh070 hh081 hh077 hh071 hh070
hh078 hh070 hh072 hh070 hh070 hh073 hh071 hh071 hh070
hh070 hh070 hh075 hh149 hh085 hh070 hh073
hh070 hh072 hh071 hh070 hh071 hh070 hh149 hh070 hh070
hh073 hh071 hh070 hh070 hh070 hh070 hh074 hh030 hh050
hh070 hh070 hh149 hh076 hh070 hh074 hh071 hh071
hh073 hh071 hh073 hh071 hh070 hh073 hh074 hh070 hh072
hh035 hh057 hh038 hh070 hh081
hh086 hh070 hh149 hh070 hh024 hh054 hh076
hh072 hh077 hh070 hh048 hh062 hh070 hh078 hh070
hh070 hh030 hh050 hh070 hh071
hh072 hh043 hh037 hh070 hh070 hh070
hh070 hh071 hh096 hh070 hh070 hh071 hh072 hh070 hh071
hh082 hh073 hh149 hh084 hh070 hh071 hh070 hh072
hh073 hh056 hh035 hh034 hh074 hh070
hh102 hh070 hh074 hh070 hh070 hh070
hh070 hh070 hh048 hh062 hh071 hh149
hh070 hh030 hh050 hh070 hh070 hh070 hh073 hh132
hh070 hh070 hh073 hh076 hh071 hh072
hh070 hh149 hh070 hh053 hh062 hh071 hh070
hh078 hh092 hh070 hh070 hh077 hh070
hh071 hh149 hh071 hh070 hh071 hh074 hh074
hh070 hh149 hh070 hh074 hh070 hh079 hh071 hh070 hh070
hh070 hh030 hh050 hh149 hh070 hh071 hh070 hh081 hh070
hh072 hh074 hh070 hh039 hh026 hh054 hh149 hh071
hh149 hh041 hh055 hh071 hh073 hh070 hh072
hh070 hh071 hh070 hh078 hh070 hh070 hh149 hh070 hh070
hh070 hh042 hh058 hh038 hh112
hh070 hh076 hh071 hh070 hh149 hh149 hh091 hh127 hh071
hh071 hh070 hh077 hh070 hh149 hh071 hh072 hh115
hh071 hh071 hh041 hh055 hh074 hh072 hh125 hh070 hh070
hh070 hh070 hh143 hh070 hh070 hh041 hh058 hh083 hh070
hh070 hh061 hh044 hh065 hh082 hh070 hh071 hh070
hh071 hh070 hh070 hh070 hh070 hh030 hh050
hh071 hh090 hh098 hh081 hh122
hh072 hh072 hh070 hh080 hh041 hh055
hh070 hh070 hh070 hh070 hh070 hh072
hh149 hh039 hh026 hh054 hh071
hh070 hh075 hh149 hh071 hh070 hh027 hh062 hh040 hh090
hh070 hh070 hh073 hh073 hh071
hh070 hh070 hh070 hh071 hh070 hh070 hh074
hh072 hh081 hh084 hh048 hh062 hh071 hh070 hh070 hh080
hh070 hh071 hh078 hh081 hh077 hh077 hh070 hh070 hh070
hh070 hh070 hh070 hh070 hh072 hh071
hh027 hh062 hh040 hh071 hh074 hh072 hh070
hh149 hh081 hh061 hh044 hh065
hh149 hh070 hh075 hh071 hh070 hh070
hh149 hh149 hh149 hh070 hh071 hh070 hh070
hh071 hh070 hh070 hh070 hh071
hh043 hh037 hh070 hh070 hh070
hh070 hh134 hh070 hh071 hh104 hh072 hh070 hh084
hh070 hh072 hh071 hh149 hh043 hh037 hh072
hh072 hh070 hh061 hh044 hh065 hh070 hh070 hh070
hh070 hh073 hh039 hh026 hh054
hh075 hh070 hh149 hh149 hh070 hh071
hh070 hh070 hh070 hh078 hh072 hh070 hh070 hh072
hh090 hh074 hh048 hh062 hh075 hh070 hh149 hh070 hh072
hh090 hh075 hh093 hh070 hh064 hh056 hh073 hh070
hh070 hh072 hh076 hh053 hh062
