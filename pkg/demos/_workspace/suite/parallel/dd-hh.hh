hh072 hh072 hh070 hh090 hh070 hh072 hh115 hh101
hh070 hh149 hh079 hh113 hh135 hh071
hh070 hh070 hh070 hh074 hh078 hh070 hh072 hh078
hh113 hh135 hh070 hh070 hh084 hh074 hh076 hh070 hh085
hh075 hh113 hh135 hh111 hh078 hh071 hh071 hh075 hh071
hh122 hh053 hh062 hh070 hh070
hh071 hh090 hh070 hh123 hh128
hh070 hh073 hh082 hh053 hh062 hh070
hh081 hh082 hh070 hh070 hh070 hh081 hh130
hh070 hh070 hh071 hh071 hh072
hh070 hh070 hh140 hh123 hh128 hh072
hh070 hh113 hh135 hh074 hh123 hh070 hh070 hh072 hh070
hh072 hh070 hh070 hh072 hh070 hh070 hh124 hh070 hh070
hh070 hh070 hh070 hh053 hh062 hh071 hh070 hh149
hh071 hh070 hh071 hh070 hh072 hh072
hh074 hh070 hh075 hh072 hh074
hh086 hh070 hh070 hh080 hh072
hh070 hh070 hh070 hh073 hh070 hh073
hh070 hh073 hh075 hh093 hh070 hh071 hh149 hh071
hh073 hh073 hh082 hh070 hh078 hh072 hh070 hh070
hh070 hh070 hh070 hh149 hh072
hh070 hh123 hh128 hh072 hh072
hh070 hh071 hh070 hh086 hh123 hh128 hh073 hh070
hh071 hh070 hh070 hh071 hh095 hh101 hh070
hh085 hh071 hh091 hh073 hh113 hh135 hh070
hh074 hh072 hh070 hh070 hh070 hh070 hh070 hh070 hh070
hh077 hh070 hh070 hh070 hh070 hh082
hh070 hh070 hh070 hh071 hh072 hh075 hh072 hh070 hh070
hh115 hh101 hh077 hh070 hh071 hh149 hh070 hh070 hh074
hh070 hh070 hh070 hh070 hh070 hh149 hh111 hh071 hh071
hh070 hh075 hh070 hh128 hh121 hh072
hh074 hh149 hh071 hh078 hh070 hh072 hh070 hh073
hh071 hh072 hh149 hh072 hh070 hh149 hh073
hh149 hh123 hh128 hh070 hh110 hh075 hh078
hh070 hh070 hh149 hh073 hh071 hh071
hh070 hh113 hh135 hh070 hh071
hh070 hh071 hh113 hh135 hh075
hh113 hh135 hh070 hh070 hh070 hh070 hh070 hh083
hh078 hh095 hh080 hh107 hh123 hh128 hh070 hh070 hh140
hh149 hh123 hh128 hh070 hh070
hh149 hh070 hh070 hh070 hh073 hh070 hh070 hh071 hh070
hh071 hh070 hh053 hh062 hh076
hh075 hh070 hh084 hh120 hh070 hh070
hh128 hh121 hh149 hh070 hh070
hh070 hh070 hh128 hh121 hh121 hh070 hh070 hh071 hh070
hh080 hh070 hh070 hh081 hh071 hh085 hh092 hh070 hh070
hh070 hh103 hh105 hh070 hh079 hh071
hh071 hh103 hh071 hh070 hh070 hh071
hh071 hh071 hh080 hh071 hh113 hh135
hh123 hh128 hh079 hh080 hh082 hh070 hh102
hh071 hh070 hh070 hh123 hh128 hh098 hh073
hh133 hh070 hh070 hh070 hh147 hh071 hh115 hh101
hh081 hh070 hh070 hh077 hh070
hh075 hh128 hh121 hh071 hh074 hh070 hh081 hh076 hh073
hh073 hh070 hh070 hh071 hh073
hh074 hh070 hh071 hh072 hh079 hh109 hh073 hh079 hh070
hh070 hh071 hh070 hh070 hh073
hh070 hh070 hh072 hh070 hh128 hh121
hh072 hh070 hh073 hh070 hh070 hh070 hh073 hh070 hh070
hh070 hh070 hh053 hh062 hh070 hh070
hh072 hh072 hh076 hh075 hh071 hh074 hh070 hh070
hh089 hh070 hh070 hh081 hh149 hh053 hh062 hh076 hh070
hh070 hh071 hh086 hh076 hh070 hh070
hh072 hh070 hh070 hh149 hh076 hh072
hh070 hh071 hh070 hh123 hh128 hh089
hh072 hh070 hh088 hh070 hh083 hh070 hh053 hh062
hh070 hh077 hh072 hh070 hh071 hh073 hh097 hh073 hh070
hh070 hh071 hh071 hh074 hh078 hh075 hh070 hh079 hh070
hh090 hh070 hh070 hh070 hh070 hh070 hh072
hh070 hh103 hh105 hh070 hh078 hh070 hh071
hh120 hh070 hh071 hh073 hh072
hh071 hh123 hh071 hh070 hh070
hh073 hh070 hh099 hh070 hh124 hh125 hh070 hh070 hh071
hh077 hh070 hh070 hh071 hh071 hh093 hh071 hh075 hh086
hh099 hh070 hh070 hh073 hh133 hh071
hh071 hh070 hh071 hh070 hh053 hh062 hh070
hh070 hh070 hh091 hh078 hh113 hh135 hh070 hh071
hh073 hh071 hh115 hh101 hh072
hh070 hh074 hh071 hh149 hh070 hh078
hh071 hh088 hh071 hh072 hh070 hh073 hh077
hh070 hh073 hh070 hh070 hh075 hh070
hh070 hh149 hh071 hh128 hh121
hh070 hh090 hh072 hh070 hh071 hh073 hh113 hh135
hh070 hh072 hh121 hh072 hh070 hh073 hh073 hh070 hh078
hh070 hh074 hh070 hh070 hh149 hh071 hh070 hh073
hh070 hh070 hh094 hh072 hh071 hh077 hh070 hh078
hh107 hh071 hh079 hh077 hh070
hh074 hh070 hh077 hh071 hh072 hh128 hh121 hh084 hh070
hh073 hh070 hh070 hh070 hh070 hh149 hh070 hh074 hh070
hh072 hh128 hh121 hh070 hh071 hh073 hh149
hh071 hh076 hh070 hh070 hh071 hh123 hh077 hh084
hh075 hh070 hh071 hh070 hh072
hh070 hh098 hh070 hh071 hh078 hh070 hh070 hh149 hh071
hh070 hh070 hh073 hh073 hh070 hh072 hh089 hh070
hh071 hh079 hh070 hh072 hh070 hh149 hh070 hh070 hh070
hh077 hh070 hh115 hh101 hh070 hh078 hh070
hh070 hh149 hh077 hh070 hh070 hh071 hh072
hh073 hh076 hh071 hh149 hh123 hh128
hh144 hh071 hh070 hh070 hh070
hh070 hh149 hh071 hh124 hh125 hh076
hh130 hh070 hh129 hh136 hh072 hh079 hh053 hh062
hh073 hh053 hh062 hh073 hh070
hh077 hh083 hh102 hh073 hh070 hh073 hh070
hh070 hh093 hh128 hh121 hh072 hh070 hh071
hh070 hh124 hh125 hh070 hh070
hh077 hh070 hh128 hh121 hh070 hh070
hh071 hh071 hh072 hh149 hh092 hh070
hh146 hh073 hh070 hh072 hh071 hh084
hh071 hh070 hh097 hh070 hh072 hh070
hh070 hh071 hh070 hh149 hh070 hh070 hh070 hh113 hh135
hh085 hh071 hh113 hh135 hh132 hh074 hh070
hh053 hh062 hh099 hh077 hh079 hh070
hh149 hh071 hh070 hh070 hh072
hh070 hh053 hh062 hh070 hh098 hh149 hh081
hh070 hh070 hh115 hh101 hh070
hh072 hh070 hh128 hh121 hh070 hh071 hh070 hh074
hh073 hh070 hh070 hh128 hh121 hh071 hh070 hh070
hh070 hh098 hh074 hh081 hh149 hh070 hh079 hh073
hh070 hh071 hh124 hh125 hh070 hh074
hh071 hh071 hh072 hh053 hh062 hh075 hh074
hh073 hh138 hh070 hh073 hh070
hh095 hh072 hh070 hh088 hh070 hh071
hh103 hh105 hh070 hh072 hh070 hh070 hh072 hh070
hh070 hh074 hh071 hh070 hh103 hh105
hh070 hh071 hh070 hh074 hh113 hh135
hh083 hh124 hh125 hh071 hh070
hh070 hh070 hh124 hh125 hh071
hh071 hh070 hh070 hh070 hh070 hh113 hh135
hh079 hh071 hh070 hh076 hh082 hh071
hh070 hh070 hh070 hh070 hh123 hh128 hh071
hh070 hh070 hh087 hh128 hh121 hh074
hh070 hh128 hh121 hh070 hh085
hh075 hh076 hh072 hh071 hh082 hh075 hh070
hh072 hh076 hh076 hh101 hh070 hh070
hh070 hh072 hh077 hh070 hh082 hh149 hh073
hh073 hh071 hh073 hh115 hh101 hh075
hh123 hh128 hh094 hh073 hh070
hh070 hh078 hh113 hh135 hh070 hh070 hh071 hh070 hh070
hh071 hh074 hh077 hh123 hh128 hh070 hh071 hh073
hh149 hh132 hh070 hh149 hh070 hh149 hh094 hh076 hh070
hh072 hh074 hh061 hh044 hh065 hh072 hh071 hh071 hh071
hh071 hh092 hh149 hh070 hh070 hh070 hh070 hh073 hh070
hh070 hh070 hh091 hh076 hh149 hh070
hh071 hh071 hh070 hh070 hh070 hh075 hh070
hh083 hh074 hh079 hh149 hh078 hh065 hh047 hh040 hh075
hh149 hh070 hh072 hh073 hh064 hh056 hh072 hh071 hh102
hh071 hh071 hh075 hh080 hh084 hh071 hh074 hh070
hh083 hh073 hh070 hh041 hh055 hh070 hh070 hh082
hh149 hh071 hh070 hh070 hh070
hh070 hh149 hh070 hh076 hh070 hh070 hh071
hh070 hh077 hh096 hh074 hh070 hh070 hh070 hh070
hh042 hh058 hh038 hh070 hh071 hh070
hh088 hh070 hh071 hh070 hh073 hh070
hh075 hh070 hh070 hh070 hh072 hh070 hh073 hh071 hh070
hh078 hh071 hh070 hh070 hh072 hh073
hh071 hh070 hh072 hh071 hh071 hh043 hh037 hh070
hh056 hh035 hh034 hh070 hh082 hh070 hh149 hh070
hh089 hh078 hh149 hh070 hh072 hh070 hh079 hh149 hh070
hh076 hh070 hh070 hh070 hh070 hh078 hh070
hh070 hh070 hh149 hh043 hh037 hh075
hh056 hh035 hh034 hh070 hh072 hh089
hh070 hh070 hh070 hh076 hh075
hh070 hh070 hh039 hh026 hh054 hh070
hh075 hh070 hh070 hh085 hh070
hh073 hh070 hh056 hh035 hh034
hh070 hh071 hh073 hh149 hh070 hh076 hh070 hh149 hh070
hh149 hh081 hh075 hh149 hh149 hh070 hh072 hh071
hh070 hh070 hh149 hh027 hh062 hh040 hh070 hh073
hh083 hh095 hh071 hh070 hh070 hh070 hh070 hh109
hh034 hh037 hh060 hh073 hh079 hh076 hh070 hh070 hh149
hh075 hh071 hh035 hh057 hh038 hh149 hh070
hh064 hh056 hh070 hh070 hh070
hh070 hh070 hh070 hh092 hh070 hh149
hh070 hh089 hh070 hh070 hh070 hh137
hh087 hh070 hh070 hh072 hh076 hh071 hh070
hh071 hh073 hh070 hh098 hh070 hh074
hh070 hh070 hh070 hh076 hh042 hh058 hh038 hh070 hh076
hh071 hh070 hh075 hh070 hh071 hh074
hh091 hh073 hh061 hh044 hh065 hh071 hh070 hh070
hh081 hh070 hh070 hh076 hh149 hh073 hh071
hh056 hh035 hh034 hh070 hh083 hh078 hh070 hh149
hh072 hh073 hh073 hh071 hh070 hh149 hh070
hh071 hh074 hh074 hh072 hh070 hh093 hh071
hh081 hh092 hh078 hh070 hh041 hh055 hh070 hh070
hh081 hh071 hh070 hh070 hh070
hh081 hh077 hh082 hh070 hh070 hh070
hh101 hh073 hh084 hh053 hh062
hh072 hh070 hh091 hh071 hh071 hh072 hh071
hh088 hh149 hh030 hh050 hh077
hh073 hh070 hh070 hh071 hh075 hh070 hh071
hh070 hh085 hh070 hh070 hh071 hh070 hh070 hh070 hh070
hh097 hh070 hh075 hh070 hh024 hh054 hh070
hh071 hh070 hh070 hh104 hh073 hh070 hh071 hh070 hh070
hh064 hh056 hh071 hh073 hh149 hh072
hh070 hh071 hh070 hh071 hh070 hh073 hh072 hh070
hh071 hh149 hh072 hh074 hh072 hh030 hh050 hh070
hh073 hh096 hh149 hh072 hh086 hh070 hh149 hh071
hh071 hh071 hh070 hh071 hh070 hh071 hh048 hh062 hh071
hh136 hh084 hh072 hh070 hh071 hh083 hh071 hh070 hh149
hh080 hh070 hh074 hh072 hh061 hh044 hh065 hh070 hh076
hh070 hh071 hh070 hh041 hh055 hh072 hh072
hh103 hh070 hh043 hh037 hh149 hh071
hh073 hh070 hh065 hh047 hh040
hh034 hh037 hh060 hh149 hh070 hh071 hh071
hh072 hh079 hh070 hh061 hh044 hh065
hh070 hh070 hh070 hh070 hh035 hh057 hh038
hh070 hh085 hh070 hh071 hh027 hh062 hh040
hh027 hh048 hh070 hh083 hh071 hh070 hh070
hh093 hh070 hh070 hh073 hh064 hh056
hh104 hh071 hh070 hh070 hh071 hh072 hh053 hh062 hh076
hh070 hh073 hh070 hh070 hh072 hh149 hh070 hh071
hh070 hh073 hh082 hh070 hh072
hh073 hh070 hh027 hh048 hh070 hh070 hh140 hh073
hh034 hh037 hh060 hh075 hh071 hh149
hh042 hh058 hh038 hh070 hh073
hh070 hh070 hh073 hh048 hh062 hh149 hh070 hh149 hh076
hh071 hh030 hh050 hh082 hh070 hh071 hh070
hh070 hh070 hh070 hh077 hh070 hh070 hh072
hh070 hh082 hh070 hh070 hh070
hh070 hh077 hh070 hh071 hh070 hh071 hh041 hh058 hh070
hh070 hh070 hh086 hh080 hh070 hh070
hh077 hh061 hh044 hh065 hh071 hh070 hh072 hh149
hh070 hh071 hh075 hh065 hh047 hh040 hh070
hh072 hh071 hh071 hh073 hh089 hh073 hh027 hh048 hh071
hh072 hh041 hh058 hh073 hh072
hh034 hh037 hh060 hh070 hh076 hh084 hh070 hh070 hh070
hh070 hh076 hh071 hh070 hh070 hh070
hh070 hh070 hh131 hh070 hh070 hh072 hh081 hh070 hh072
hh071 hh090 hh072 hh076 hh070 hh072
hh072 hh070 hh070 hh090 hh109 hh070 hh070 hh070
hh071 hh083 hh070 hh041 hh058 hh072 hh073 hh070
hh071 hh082 hh145 hh027 hh048 hh070
hh070 hh070 hh070 hh070 hh070
hh070 hh070 hh070 hh064 hh056 hh075 hh073
hh070 hh072 hh133 hh070 hh149 hh071 hh070
hh093 hh064 hh056 hh078 hh071 hh070
hh070 hh070 hh119 hh030 hh050 hh079 hh070
hh072 hh070 hh070 hh070 hh100 hh149 hh070 hh070 hh126
hh113 hh070 hh071 hh070 hh070
hh071 hh071 hh070 hh071 hh042 hh058 hh038 hh070 hh070
hh091 hh105 hh053 hh062 hh072 hh071 hh076 hh071
hh070 hh070 hh071 hh070 hh070 hh070 hh070 hh071
hh120 hh073 hh071 hh071 hh071 hh073 hh070
hh071 hh070 hh027 hh062 hh040 hh075 hh070 hh070
hh075 hh070 hh070 hh071 hh138 hh090
hh070 hh070 hh092 hh065 hh047 hh040 hh149 hh110
hh071 hh056 hh035 hh034 hh070 hh070 hh071
hh039 hh026 hh054 hh070 hh070 hh071 hh075
hh073 hh070 hh070 hh078 hh077 hh071 hh070 hh071
hh080 hh081 hh149 hh070 hh070 hh070
hh070 hh129 hh070 hh074 hh071 hh070 hh075 hh041 hh055
hh088 hh149 hh078 hh070 hh149 hh149 hh041 hh058
hh070 hh070 hh070 hh149 hh070 hh109 hh070 hh070 hh070
hh086 hh070 hh070 hh071 hh071 hh070 hh070 hh070 hh071
hh071 hh074 hh070 hh071 hh071 hh072 hh075 hh070
hh073 hh072 hh070 hh078 hh056 hh035 hh034 hh117 hh071
hh149 hh074 hh042 hh058 hh038 hh070
hh070 hh072 hh070 hh070 hh070 hh149 hh095 hh073 hh071
hh070 hh071 hh070 hh070 hh085
hh080 hh070 hh091 hh071 hh082 hh070 hh104 hh075
hh070 hh071 hh071 hh078 hh074 hh072
hh071 hh070 hh070 hh075 hh075 hh149
hh070 hh073 hh070 hh070 hh105 hh087 hh070
hh070 hh070 hh149 hh024 hh054 hh080 hh072 hh071
hh071 hh087 hh072 hh070 hh072 hh073 hh070 hh086
hh070 hh088 hh070 hh070 hh070 hh072 hh071 hh070
hh070 hh071 hh070 hh075 hh027 hh062 hh040
hh071 hh077 hh070 hh070 hh070 hh071
hh091 hh064 hh056 hh070 hh149 hh099
hh071 hh149 hh083 hh071 hh073 hh070 hh076 hh070
hh071 hh089 hh070 hh070 hh070 hh071 hh027 hh048
hh072 hh070 hh073 hh070 hh073 hh070 hh070 hh070 hh092
hh071 hh056 hh035 hh034 hh074 hh070 hh070 hh072
hh077 hh070 hh072 hh072 hh073 hh070 hh070 hh078
hh094 hh072 hh070 hh070 hh071 hh071 hh073 hh071 hh070
hh077 hh070 hh070 hh070 hh116
hh070 hh089 hh075 hh074 hh071 hh082
hh118 hh073 hh070 hh149 hh070 hh070 hh148
hh075 hh070 hh077 hh070 hh071 hh073 hh073
hh071 hh076 hh070 hh109 hh070 hh149 hh070
